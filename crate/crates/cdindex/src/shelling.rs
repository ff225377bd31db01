//! Non-pure shellings, h-triangles, and the shelling components that
//! assemble the cd-index of a semisuspension facet by facet.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::binomial;
use thiserror::Error;

use crate::complex::{
    ball_cd, boolean_poset, face_id, omega_cd, semisuspension, ComplexError, Face,
    SimplicialComplex,
};
use crate::flag::ab_index;
use crate::ncpoly::{ab_to_cd, CdPoly};
use crate::rat::int;

/// Errors raised by shelling constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShellingError {
    #[error("shelling components need 1 <= n and 0 <= i <= k <= n, got n = {n}, k = {k}, i = {i}")]
    Bounds { n: i64, k: i64, i: i64 },
    #[error("initial simplex subcomplexes need 0 <= i <= k, got k = {k}, i = {i}")]
    DeltaBounds { k: i64, i: i64 },
    #[error("the order must list every facet exactly once: {0}")]
    BadOrder(String),
    #[error(
        "not a shelling at facet {r}: the intersection with the earlier facets, \
         {intersection}, is not pure of dimension {required}"
    )]
    NotAShelling {
        r: usize,
        intersection: String,
        required: i64,
    },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// The first i+1 facets of the boundary of the k-simplex on vertices
/// {1, ..., k+1}, where facet j omits vertex j.
pub fn delta_complex(k: i64, i: i64) -> Result<SimplicialComplex, ShellingError> {
    if k < 0 || i < 0 || i > k {
        return Err(ShellingError::DeltaBounds { k, i });
    }
    let facets = (1..=(i + 1)).map(|j| {
        (1..=(k + 1))
            .filter(|v| *v != j)
            .map(|v| v.to_string())
            .collect::<Face>()
    });
    Ok(SimplicialComplex::new(facets)?)
}

/// How to compute a shelling component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiMethod {
    /// Difference of semisuspension cd-indices of two initial subcomplexes.
    Direct,
    /// The derivation G applied to a smaller component, bottoming out in
    /// products of simplex and point-and-cell cd-indices.
    Recursive,
    /// Alternating binomial sum over the i = 0 column.
    Binomial,
}

/// The shelling component: what attaching the (i+1)-st facet of a
/// k-dimensional simplex boundary adds to the cd-index of a
/// semisuspension at rank n.
pub fn phi_shelling_component(
    n: i64,
    k: i64,
    i: i64,
    method: PhiMethod,
) -> Result<CdPoly, ShellingError> {
    if n < 1 || i < 0 || i > k || k > n {
        return Err(ShellingError::Bounds { n, k, i });
    }
    match method {
        PhiMethod::Direct => {
            let upper = semisusp_cd(k, i, n)?;
            if i == 0 {
                Ok(upper)
            } else {
                Ok(&upper - &semisusp_cd(k, i - 1, n)?)
            }
        }
        PhiMethod::Recursive => phi_recursive(n, k, i),
        PhiMethod::Binomial => {
            let mut total = CdPoly::zero();
            for j in 0..=i {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let term = phi_boundary(n, k - j)?;
                total = &total + &term.scale(&int(sign * binomial(i, j)));
            }
            Ok(total)
        }
    }
}

fn semisusp_cd(k: i64, i: i64, n: i64) -> Result<CdPoly, ShellingError> {
    let semi = semisuspension(&delta_complex(k, i)?, n)?;
    let psi = ab_index(&semi).map_err(ComplexError::from)?;
    Ok(ab_to_cd(&psi).map_err(ComplexError::from)?)
}

fn phi_recursive(n: i64, k: i64, i: i64) -> Result<CdPoly, ShellingError> {
    if i == 0 {
        phi_boundary(n, k)
    } else {
        Ok(phi_recursive(n - 1, k - 1, i - 1)?.derivation_g())
    }
}

fn phi_boundary(n: i64, k: i64) -> Result<CdPoly, ShellingError> {
    if k == 0 {
        return Ok(ball_cd(n));
    }
    let simplex = ab_index(&boolean_poset(k as u32)?).map_err(ComplexError::from)?;
    let simplex = ab_to_cd(&simplex).map_err(ComplexError::from)?;
    Ok(&simplex * &omega_cd(n - k + 1)?)
}

/// Every shelling component with 1 <= n' <= n, keyed by (n', k, i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTable {
    entries: BTreeMap<(i64, i64, i64), CdPoly>,
}

impl PhiTable {
    /// Computes the whole table once with the given method.
    pub fn up_to(n: i64, method: PhiMethod) -> Result<Self, ShellingError> {
        let mut entries = BTreeMap::new();
        for m in 1..=n {
            for k in 0..=m {
                for i in 0..=k {
                    entries.insert((m, k, i), phi_shelling_component(m, k, i, method)?);
                }
            }
        }
        Ok(PhiTable { entries })
    }

    /// Looks up one component.
    pub fn get(&self, n: i64, k: i64, i: i64) -> Option<&CdPoly> {
        self.entries.get(&(n, k, i))
    }

    /// All components in (n, k, i) order.
    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64, i64), &CdPoly)> {
        self.entries.iter()
    }
}

/// Shelling type counts: `counts[(k, i)]` is the number of facets that
/// attach with type (k, i), and `types[r]` is the type of the (r+1)-st
/// facet of the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HTriangle {
    pub counts: BTreeMap<(i64, i64), i64>,
    pub types: Vec<(i64, i64)>,
}

impl HTriangle {
    /// The count for one type, zero when absent.
    pub fn get(&self, k: i64, i: i64) -> i64 {
        self.counts.get(&(k, i)).copied().unwrap_or(0)
    }
}

fn render_facets(c: &SimplicialComplex) -> String {
    let list: Vec<String> = c
        .facets()
        .iter()
        .map(|f| format!("{{{}}}", face_id(f)))
        .collect();
    format!("[{}]", list.join(", "))
}

/// Checks that the facet order is a shelling and returns the h-triangle.
///
/// The first facet has type (|F|, 0). Every later facet F must meet the
/// union of the earlier facet closures in a complex that is pure of
/// dimension dim(F) - 1; its type is (|F|, i) with i the number of facets
/// of that intersection. A zero-dimensional complex passes in any order
/// because each intersection is then the pure (-1)-dimensional complex.
pub fn verify_shelling_h_triangle(
    delta: &SimplicialComplex,
    order: &[Face],
) -> Result<HTriangle, ShellingError> {
    let mut waiting: BTreeSet<&Face> = delta.facets().iter().collect();
    if order.len() != waiting.len() {
        return Err(ShellingError::BadOrder(format!(
            "the complex has {} facets but the order lists {}",
            waiting.len(),
            order.len()
        )));
    }
    for f in order {
        if !waiting.remove(f) {
            return Err(ShellingError::BadOrder(format!(
                "`{}` is not a facet or appears twice",
                face_id(f)
            )));
        }
    }
    let mut tri = HTriangle {
        counts: BTreeMap::new(),
        types: Vec::new(),
    };
    for (r, facet) in order.iter().enumerate() {
        let k = facet.len() as i64;
        let i = if r == 0 {
            0
        } else {
            let prior = SimplicialComplex::new(order[..r].iter().cloned())?;
            let single = SimplicialComplex::new([facet.clone()])?;
            let meet = prior.intersection(&single)?;
            let required = k - 2;
            if !meet
                .facets()
                .iter()
                .all(|f| f.len() as i64 - 1 == required)
            {
                return Err(ShellingError::NotAShelling {
                    r: r + 1,
                    intersection: render_facets(&meet),
                    required,
                });
            }
            meet.facets().len() as i64
        };
        *tri.counts.entry((k, i)).or_insert(0) += 1;
        tri.types.push((k, i));
    }
    Ok(tri)
}

/// Assembles the cd-index of `semisuspension(delta, n)` from a shelling:
/// the sum of the shelling components weighted by the h-triangle.
pub fn semisusp_via_h_triangle(
    delta: &SimplicialComplex,
    order: &[Face],
    n: i64,
) -> Result<CdPoly, ShellingError> {
    let tri = verify_shelling_h_triangle(delta, order)?;
    if n < 1 || n < delta.dim() + 1 {
        return Err(ShellingError::Complex(ComplexError::DimensionTooLarge {
            dim: delta.dim(),
            n,
        }));
    }
    let mut total = CdPoly::zero();
    for (&(k, i), &count) in &tri.counts {
        let term = phi_shelling_component(n, k, i, PhiMethod::Recursive)?;
        total = &total + &term.scale(&int(count));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::face;
    use crate::flag::cd_index;
    use crate::ops::{cartesian_product, stanley_product};
    use crate::poset::chain_poset;
    use crate::testkit::boolean;

    fn cd(text: &str) -> CdPoly {
        CdPoly::parse(text).unwrap()
    }

    fn phi(n: i64, k: i64, i: i64) -> CdPoly {
        phi_shelling_component(n, k, i, PhiMethod::Direct).unwrap()
    }

    #[test]
    fn delta_complexes_take_initial_facets() {
        let path = delta_complex(2, 1).unwrap();
        assert_eq!(path.facets().len(), 2);
        assert_eq!(path.dim(), 1);
        assert!(path.contains(&face(&["3"])));

        assert_eq!(delta_complex(1, 0).unwrap().facets(), &[face(&["2"])]);
        assert_eq!(delta_complex(3, 3).unwrap().facets().len(), 4);
        assert_eq!(delta_complex(0, 0).unwrap().dim(), -1);
        assert!(matches!(
            delta_complex(2, 3),
            Err(ShellingError::DeltaBounds { .. })
        ));
    }

    #[test]
    fn components_of_degree_two() {
        assert_eq!(phi(2, 0, 0), cd("c^2 - 2*d"));
        assert_eq!(phi(2, 1, 0), cd("c^2 - d"));
        assert_eq!(phi(2, 1, 1), cd("d"));
        assert_eq!(phi(2, 2, 0), cd("c^2"));
        assert_eq!(phi(2, 2, 1), cd("d"));
        assert_eq!(phi(2, 2, 2), CdPoly::zero());
    }

    #[test]
    fn components_of_degree_three() {
        assert_eq!(phi(3, 0, 0), cd("c^3 - 2*dc"));
        assert_eq!(phi(3, 1, 0), cd("c^3 - dc - cd"));
        assert_eq!(phi(3, 1, 1), cd("dc - cd"));
        assert_eq!(phi(3, 2, 0), cd("c^3 - cd"));
        assert_eq!(phi(3, 2, 1), cd("dc"));
        assert_eq!(phi(3, 2, 2), cd("cd"));
        assert_eq!(phi(3, 3, 0), cd("c^3 + dc"));
        assert_eq!(phi(3, 3, 1), cd("dc + cd"));
        assert_eq!(phi(3, 3, 2), cd("cd"));
        assert_eq!(phi(3, 3, 3), CdPoly::zero());
    }

    #[test]
    fn all_methods_agree() {
        for n in 1..=4 {
            for k in 0..=n {
                for i in 0..=k {
                    let direct = phi_shelling_component(n, k, i, PhiMethod::Direct).unwrap();
                    let recursive =
                        phi_shelling_component(n, k, i, PhiMethod::Recursive).unwrap();
                    let binomial =
                        phi_shelling_component(n, k, i, PhiMethod::Binomial).unwrap();
                    assert_eq!(direct, recursive, "n={n} k={k} i={i}");
                    assert_eq!(direct, binomial, "n={n} k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn component_bounds_are_checked() {
        assert!(matches!(
            phi_shelling_component(2, 3, 0, PhiMethod::Direct),
            Err(ShellingError::Bounds { .. })
        ));
        assert!(matches!(
            phi_shelling_component(2, 1, 2, PhiMethod::Recursive),
            Err(ShellingError::Bounds { .. })
        ));
        assert!(matches!(
            phi_shelling_component(0, 0, 0, PhiMethod::Binomial),
            Err(ShellingError::Bounds { .. })
        ));
    }

    #[test]
    fn pascal_relation() {
        for n in 2..=4 {
            for k in 0..n {
                for i in 0..=k {
                    let left = phi_shelling_component(n, k + 1, i, PhiMethod::Recursive).unwrap();
                    let right = &phi_shelling_component(n, k, i, PhiMethod::Recursive).unwrap()
                        + &phi_shelling_component(n, k + 1, i + 1, PhiMethod::Recursive).unwrap();
                    assert_eq!(left, right, "n={n} k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn four_posets_identity() {
        let b1 = chain_poset(&["0", "1"]).unwrap();
        let b2 = boolean(2);
        for n in 1..=3 {
            for k in 0..=n {
                for i in 0..=k {
                    let p = semisuspension(&delta_complex(k, i).unwrap(), n).unwrap();
                    let prism = ab_index(&cartesian_product(&p, &b1).unwrap()).unwrap();
                    let first =
                        ab_index(&semisuspension(&delta_complex(k + 1, 0).unwrap(), n + 1).unwrap())
                            .unwrap();
                    let raised = ab_index(
                        &semisuspension(&delta_complex(k + 1, i + 1).unwrap(), n + 1).unwrap(),
                    )
                    .unwrap();
                    let glued = ab_index(&stanley_product(&p, &b2).unwrap()).unwrap();
                    assert_eq!(&prism + &first, &raised + &glued, "n={n} k={k} i={i}");
                }
            }
        }
    }

    #[test]
    fn shelling_types_and_h_triangles() {
        let circle = SimplicialComplex::from_slices(&[
            &["a", "b"],
            &["b", "c"],
            &["a", "c"],
        ])
        .unwrap();
        let order = [face(&["a", "b"]), face(&["b", "c"]), face(&["a", "c"])];
        let tri = verify_shelling_h_triangle(&circle, &order).unwrap();
        assert_eq!(tri.types, vec![(2, 0), (2, 1), (2, 2)]);
        assert_eq!(tri.get(2, 0), 1);
        assert_eq!(tri.get(2, 1), 1);
        assert_eq!(tri.get(2, 2), 1);
        assert_eq!(tri.get(1, 0), 0);

        let reordered = [face(&["b", "c"]), face(&["a", "b"]), face(&["a", "c"])];
        assert_eq!(
            verify_shelling_h_triangle(&circle, &reordered).unwrap().counts,
            tri.counts
        );

        let nonpure =
            SimplicialComplex::from_slices(&[&["a", "b", "c"], &["c", "d"]]).unwrap();
        let tri = verify_shelling_h_triangle(
            &nonpure,
            &[face(&["a", "b", "c"]), face(&["c", "d"])],
        )
        .unwrap();
        assert_eq!(tri.types, vec![(3, 0), (2, 1)]);

        let disjoint = SimplicialComplex::from_slices(&[&["a", "b"], &["c", "d"]]).unwrap();
        let err = verify_shelling_h_triangle(
            &disjoint,
            &[face(&["a", "b"]), face(&["c", "d"])],
        )
        .unwrap_err();
        assert_eq!(
            err,
            ShellingError::NotAShelling {
                r: 2,
                intersection: "[{}]".into(),
                required: 0,
            }
        );

        assert!(matches!(
            verify_shelling_h_triangle(&circle, &order[..2]),
            Err(ShellingError::BadOrder(_))
        ));
        let doubled = [face(&["a", "b"]), face(&["a", "b"]), face(&["a", "c"])];
        assert!(matches!(
            verify_shelling_h_triangle(&circle, &doubled),
            Err(ShellingError::BadOrder(_))
        ));
    }

    #[test]
    fn h_triangles_rebuild_semisuspensions() {
        let cases: [(&[&[&str]], &[&[&str]], i64); 5] = [
            (
                &[&["a", "b"], &["b", "c"], &["a", "c"]],
                &[&["a", "b"], &["b", "c"], &["a", "c"]],
                3,
            ),
            (&[&["a", "b"], &["b", "c"]], &[&["a", "b"], &["b", "c"]], 2),
            (&[&["a", "b", "c"]], &[&["a", "b", "c"]], 4),
            (
                &[&["a", "b", "c"], &["c", "d"]],
                &[&["a", "b", "c"], &["c", "d"]],
                3,
            ),
            (&[&["a"], &["b"], &["c"]], &[&["a"], &["b"], &["c"]], 2),
        ];
        for (facets, order, n) in cases {
            let delta = SimplicialComplex::from_slices(facets).unwrap();
            let order: Vec<Face> = order.iter().map(|f| face(f)).collect();
            let shelled = semisusp_via_h_triangle(&delta, &order, n).unwrap();
            let direct = cd_index(&semisuspension(&delta, n).unwrap()).unwrap();
            assert_eq!(shelled, direct);
        }
        let triangle =
            SimplicialComplex::from_slices(&[&["a", "b"], &["b", "c"], &["a", "c"]]).unwrap();
        let order = [face(&["a", "b"]), face(&["b", "c"]), face(&["a", "c"])];
        assert_eq!(
            semisusp_via_h_triangle(&triangle, &order, 3).unwrap(),
            cd("c^3 + dc")
        );
    }

    #[test]
    fn phi_table_collects_components() {
        let table = PhiTable::up_to(3, PhiMethod::Recursive).unwrap();
        assert_eq!(table.iter().count(), 3 + 6 + 10);
        assert_eq!(table.get(3, 2, 1), Some(&cd("dc")));
        assert_eq!(table.get(2, 0, 0), Some(&cd("c^2 - 2*d")));
        assert_eq!(table.get(4, 0, 0), None);
    }
}

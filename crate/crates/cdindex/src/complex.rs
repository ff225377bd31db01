//! Abstract simplicial complexes and the ranked posets built from them:
//! classical face posets, semisuspensions, the point-and-cell posets
//! `omega_poset`, and a catalog of small named stratifications.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use num_integer::binomial;
use thiserror::Error;

use crate::flag::ab_index;
use crate::ncpoly::{ab_to_cd, AbPoly, CdLetter, CdPoly, NotCdExpressible};
use crate::poset::{Poset, PosetError, PosetSpec};
use crate::rat::{frac, int};

/// A face is a finite set of vertex ids; the empty set is the empty face.
pub type Face = BTreeSet<String>;

/// Builds a face from vertex names.
pub fn face(vertices: &[&str]) -> Face {
    vertices.iter().map(|v| v.to_string()).collect()
}

/// Renders a face as its sorted vertex names joined by commas. The empty
/// face renders as the empty string.
pub fn face_id(face: &Face) -> String {
    face.iter().cloned().collect::<Vec<_>>().join(",")
}

/// Errors raised by complex constructions and the checks built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("a complex needs at least one facet; the one with only the empty face is [[]]")]
    Void,
    #[error("invalid vertex id {0:?}: ids must be nonempty and free of `,`, `*`, and `^`")]
    InvalidVertexId(String),
    #[error("face `{0}` is not in the complex")]
    MissingFace(String),
    #[error("a complex of dimension {dim} does not fit below rank {n}")]
    DimensionTooLarge { dim: i64, n: i64 },
    #[error("{0}")]
    BadParameter(String),
    #[error("carrier map: {0}")]
    BadCarrier(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    NotCdExpressible(#[from] NotCdExpressible),
}

/// An abstract simplicial complex stored by its maximal faces. Every
/// complex contains the empty face; the smallest one, written `[[]]`, has
/// no other face and dimension -1. A complex with no faces at all is
/// rejected.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    vertices: BTreeSet<String>,
    facets: Vec<Face>,
    faces: OnceLock<BTreeSet<Face>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds a complex from a list of faces. Listed faces contained in
    /// other listed faces are dropped, so the input does not have to
    /// consist of maximal faces only.
    pub fn new<I>(faces: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = Face>,
    {
        let listed: BTreeSet<Face> = faces.into_iter().collect();
        if listed.is_empty() {
            return Err(ComplexError::Void);
        }
        for f in &listed {
            if f.len() > 62 {
                return Err(ComplexError::BadParameter(format!(
                    "a facet with {} vertices is too large to enumerate",
                    f.len()
                )));
            }
            for v in f {
                if v.is_empty() || v.contains(',') || v == "*" || v == "^" {
                    return Err(ComplexError::InvalidVertexId(v.clone()));
                }
            }
        }
        let facets: Vec<Face> = listed
            .iter()
            .filter(|f| !listed.iter().any(|g| g != *f && f.is_subset(g)))
            .cloned()
            .collect();
        let vertices = facets.iter().flatten().cloned().collect();
        Ok(SimplicialComplex {
            vertices,
            facets,
            faces: OnceLock::new(),
        })
    }

    /// Convenience constructor from vertex-name slices.
    pub fn from_slices(facets: &[&[&str]]) -> Result<Self, ComplexError> {
        Self::new(facets.iter().map(|f| face(f)))
    }

    /// All vertices that occur in some facet.
    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    /// The maximal faces.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// One less than the largest facet size, so `[[]]` has dimension -1.
    pub fn dim(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
            .expect("a complex has at least one facet")
    }

    /// Every face, the empty face included.
    pub fn faces(&self) -> &BTreeSet<Face> {
        self.faces.get_or_init(|| {
            let mut all = BTreeSet::new();
            for facet in &self.facets {
                let vs: Vec<&String> = facet.iter().collect();
                for mask in 0u64..(1 << vs.len()) {
                    let f: Face = vs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, v)| (*v).clone())
                        .collect();
                    all.insert(f);
                }
            }
            all
        })
    }

    /// Whether the given vertex set is a face.
    pub fn contains(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// The faces disjoint from `x` whose union with `x` is again a face.
    pub fn link(&self, x: &Face) -> Result<SimplicialComplex, ComplexError> {
        if !self.contains(x) {
            return Err(ComplexError::MissingFace(face_id(x)));
        }
        Self::new(
            self.facets
                .iter()
                .filter(|f| x.is_subset(f))
                .map(|f| f - x),
        )
    }

    /// The alternating sum of nonempty face counts by dimension.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces()
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// The Euler characteristic minus one, so `[[]]` gets -1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.euler_characteristic() - 1
    }

    /// The complex whose faces are the faces of either input.
    pub fn union(&self, other: &Self) -> Result<Self, ComplexError> {
        Self::new(self.facets.iter().chain(&other.facets).cloned())
    }

    /// The complex whose faces are the faces of both inputs.
    pub fn intersection(&self, other: &Self) -> Result<Self, ComplexError> {
        Self::new(self.faces().intersection(other.faces()).cloned())
    }
}

/// The face poset of a complex: one element per face, ranked by size, with
/// every zeta value 1. With `adjoin_top` a maximal element `^` is added two
/// ranks above the dimension; without it the poset has a top exactly when
/// the complex has a single facet.
pub fn face_poset_classical(
    complex: &SimplicialComplex,
    adjoin_top: bool,
) -> Result<Poset, ComplexError> {
    let mut spec = PosetSpec {
        bottom: Some(String::new()),
        ..Default::default()
    };
    for f in complex.faces() {
        spec.elements.push((face_id(f), f.len() as i64));
        for g in complex.faces() {
            if f.len() < g.len() && f.is_subset(g) {
                spec.relations.push((face_id(f), face_id(g)));
            }
        }
    }
    if adjoin_top {
        spec.elements.push(("^".into(), complex.dim() + 2));
        for f in complex.faces() {
            spec.relations.push((face_id(f), "^".into()));
        }
        spec.top = Some("^".into());
    } else if complex.facets.len() == 1 {
        spec.top = Some(face_id(&complex.facets[0]));
    }
    Ok(spec.build()?)
}

/// Adjoins two elements to the face poset of a complex of dimension at most
/// n-1: a complementary cell `*` at rank n, whose zeta values record the
/// reduced Euler characteristics of face links, and a top `^` at rank n+1.
///
/// A face `F` below `*` carries zeta 1 + (-1)^(n-|F|) times the reduced
/// Euler characteristic of its link; faces of size exactly n stay
/// incomparable to `*`.
pub fn semisuspension(complex: &SimplicialComplex, n: i64) -> Result<Poset, ComplexError> {
    let dim = complex.dim();
    if n < 1 || n < dim + 1 {
        return Err(ComplexError::DimensionTooLarge { dim, n });
    }
    let mut spec = PosetSpec {
        bottom: Some(String::new()),
        top: Some("^".into()),
        ..Default::default()
    };
    for f in complex.faces() {
        let id = face_id(f);
        let size = f.len() as i64;
        spec.elements.push((id.clone(), size));
        for g in complex.faces() {
            if f.len() < g.len() && f.is_subset(g) {
                spec.relations.push((id.clone(), face_id(g)));
            }
        }
        spec.relations.push((id.clone(), "^".into()));
        if size < n {
            spec.relations.push((id.clone(), "*".into()));
            let tilde = complex.link(f)?.reduced_euler_characteristic();
            let sign = if (n - size) % 2 == 0 { 1 } else { -1 };
            let zeta = 1 + sign * tilde;
            if zeta != 1 {
                spec.zeta.push((id, "*".into(), int(zeta)));
            }
        }
    }
    spec.elements.push(("*".into(), n));
    spec.elements.push(("^".into(), n + 1));
    spec.relations.push(("*".into(), "^".into()));
    Ok(spec.build()?)
}

/// A bounded poset of rank n+1 with one element `p` at rank 1 and one
/// element `c` at rank n. For n = 1 the middle elements are incomparable;
/// otherwise they are comparable with zeta 1 + (-1)^n, which is an explicit
/// zero when n is odd.
pub fn omega_poset(n: i64) -> Result<Poset, ComplexError> {
    if n < 1 {
        return Err(ComplexError::BadParameter(format!(
            "a point-and-cell poset needs n >= 1, got {n}"
        )));
    }
    let mut spec = PosetSpec {
        elements: vec![
            ("0".into(), 0),
            ("p".into(), 1),
            ("c".into(), n),
            ("b".into(), n + 1),
        ],
        relations: vec![
            ("0".into(), "p".into()),
            ("0".into(), "c".into()),
            ("p".into(), "b".into()),
            ("c".into(), "b".into()),
        ],
        bottom: Some("0".into()),
        top: Some("b".into()),
        zeta: Vec::new(),
    };
    if n >= 2 {
        spec.relations.push(("p".into(), "c".into()));
        let zeta = 1 + if n % 2 == 0 { 1 } else { -1 };
        if zeta != 1 {
            spec.zeta.push(("p".into(), "c".into(), int(zeta)));
        }
    }
    Ok(spec.build()?)
}

fn cc_minus_2d() -> CdPoly {
    let c = CdPoly::var(CdLetter::C);
    &(&c * &c) - &CdPoly::monomial(vec![CdLetter::D], int(2))
}

/// Closed form for the cd-index of [`omega_poset`]: with k = c^2 - 2d it is
/// (k^(n/2) + c k^((n-2)/2) c) / 2 for even n and
/// (c k^((n-1)/2) + k^((n-1)/2) c) / 2 for odd n.
pub fn omega_cd(n: i64) -> Result<CdPoly, ComplexError> {
    if n < 1 {
        return Err(ComplexError::BadParameter(format!(
            "a point-and-cell poset needs n >= 1, got {n}"
        )));
    }
    let c = CdPoly::var(CdLetter::C);
    let k = cc_minus_2d();
    let sum = if n % 2 == 0 {
        &k.pow((n / 2) as usize) + &(&(&c * &k.pow(((n - 2) / 2) as usize)) * &c)
    } else {
        let half = k.pow(((n - 1) / 2) as usize);
        &(&c * &half) + &(&half * &c)
    };
    Ok(sum.scale(&frac(1, 2)))
}

/// The cd-index of an n-cell stratified as an interior cell over its
/// boundary: (c^2 - 2d)^(n/2), with a trailing c when n is odd.
pub fn ball_cd(n: i64) -> CdPoly {
    assert!(n >= 0, "ball_cd needs a nonnegative dimension");
    let half = cc_minus_2d().pow((n / 2) as usize);
    if n % 2 == 0 {
        half
    } else {
        &half * &CdPoly::var(CdLetter::C)
    }
}

/// The poset of all subsets of {1, ..., k} ordered by containment, built as
/// the face poset of a single (k-1)-simplex.
pub fn boolean_poset(k: u32) -> Result<Poset, ComplexError> {
    let facet: Face = (1..=k).map(|i| i.to_string()).collect();
    face_poset_classical(&SimplicialComplex::new([facet])?, false)
}

/// Face posets of an n-gon disk in three stratifications: variant 1 keeps
/// every vertex and edge as its own cell, variant 2 merges the edges into a
/// single cell with zeta 2 over each vertex, and variant 3 also merges the
/// vertices. All three have cd-index c^2 + (n-2)d.
pub fn ngon_poset(n: u64, variant: u8) -> Result<Poset, ComplexError> {
    if n < 1 {
        return Err(ComplexError::BadParameter(format!(
            "an n-gon needs n >= 1, got {n}"
        )));
    }
    let count = int(n as i64);
    let mut spec = PosetSpec {
        elements: vec![("0".into(), 0), ("c".into(), 3)],
        bottom: Some("0".into()),
        top: Some("c".into()),
        ..Default::default()
    };
    match variant {
        1 => {
            for i in 1..=n {
                let v = format!("v{i}");
                let e = format!("e{i}");
                spec.elements.push((v.clone(), 1));
                spec.elements.push((e.clone(), 2));
                spec.relations.push(("0".into(), v.clone()));
                spec.relations.push((e.clone(), "c".into()));
                spec.relations.push((v.clone(), e.clone()));
                let next = i % n + 1;
                if next == i {
                    spec.zeta.push((v, e, int(2)));
                } else {
                    spec.relations.push((format!("v{next}"), e));
                }
            }
        }
        2 => {
            spec.elements.push(("e".into(), 2));
            spec.relations.push(("e".into(), "c".into()));
            if n != 1 {
                spec.zeta.push(("0".into(), "e".into(), count));
            }
            for i in 1..=n {
                let v = format!("v{i}");
                spec.elements.push((v.clone(), 1));
                spec.relations.push(("0".into(), v.clone()));
                spec.relations.push((v.clone(), "e".into()));
                spec.zeta.push((v, "e".into(), int(2)));
            }
        }
        3 => {
            spec.elements.push(("v".into(), 1));
            spec.elements.push(("e".into(), 2));
            spec.relations.push(("0".into(), "v".into()));
            spec.relations.push(("v".into(), "e".into()));
            spec.relations.push(("e".into(), "c".into()));
            if n != 1 {
                spec.zeta.push(("0".into(), "v".into(), count.clone()));
                spec.zeta.push(("0".into(), "e".into(), count));
            }
            spec.zeta.push(("v".into(), "e".into(), int(2)));
        }
        v => {
            return Err(ComplexError::BadParameter(format!(
                "an n-gon variant must be 1, 2, or 3, got {v}"
            )));
        }
    }
    Ok(spec.build()?)
}

/// A bounded poset 0 < dM < M with ranks 0, n, n+1 recording an n-manifold
/// with Euler characteristic chi: the boundary element carries zeta
/// (1 - (-1)^n) chi and the top cell carries zeta chi.
pub fn manifold_poset(n: i64, chi: i64) -> Result<Poset, ComplexError> {
    if n < 1 {
        return Err(ComplexError::BadParameter(format!(
            "a manifold stratification needs n >= 1, got {n}"
        )));
    }
    let mut spec = PosetSpec {
        elements: vec![("0".into(), 0), ("dM".into(), n), ("M".into(), n + 1)],
        relations: vec![
            ("0".into(), "dM".into()),
            ("0".into(), "M".into()),
            ("dM".into(), "M".into()),
        ],
        bottom: Some("0".into()),
        top: Some("M".into()),
        zeta: Vec::new(),
    };
    let boundary = if n % 2 == 0 { 0 } else { 2 * chi };
    if boundary != 1 {
        spec.zeta.push(("0".into(), "dM".into(), int(boundary)));
    }
    if chi != 1 {
        spec.zeta.push(("0".into(), "M".into(), int(chi)));
    }
    Ok(spec.build()?)
}

/// An (n+2)-chain whose zeta values encode a face count vector: the bottom
/// sees f[i-1] at rank i, and the element at rank i sees
/// binomial(n+1-i, n+1-j) at rank j above it.
pub fn simple_chain_poset(f: &[i64], n: i64) -> Result<Poset, ComplexError> {
    if n < 0 || f.len() != n as usize {
        return Err(ComplexError::BadParameter(format!(
            "need one face count per rank 1..=n, got {} counts for n = {n}",
            f.len()
        )));
    }
    let mut spec = PosetSpec {
        bottom: Some("x0".into()),
        top: Some(format!("x{}", n + 1)),
        ..Default::default()
    };
    for i in 0..=(n + 1) {
        spec.elements.push((format!("x{i}"), i));
        if i > 0 {
            spec.relations.push((format!("x{}", i - 1), format!("x{i}")));
        }
    }
    for i in 1..=n {
        if f[i as usize - 1] != 1 {
            spec.zeta
                .push(("x0".into(), format!("x{i}"), int(f[i as usize - 1])));
        }
        for j in (i + 1)..=(n + 1) {
            let b = binomial(n + 1 - i, n + 1 - j);
            if b != 1 {
                spec.zeta.push((format!("x{i}"), format!("x{j}"), int(b)));
            }
        }
    }
    Ok(spec.build()?)
}

/// Checks the rank-raising identity: the ab-index of the semisuspension at
/// `n + 1` equals that at `n` times `a + b`, minus the ab-index of the
/// interval below `*` times the expansion of `d`.
pub fn check_wednesday_raising(gamma: &SimplicialComplex, n: i64) -> Result<bool, ComplexError> {
    let low = semisuspension(gamma, n)?;
    let (bottom, _) = low.bounds()?;
    let star = low.require_index("*")?;
    let below_star = ab_index(&low.interval(bottom, star)?)?;
    let raised = ab_index(&semisuspension(gamma, n + 1)?)?;
    let c_ab = AbPoly::var(crate::ncpoly::AbLetter::A) + AbPoly::var(crate::ncpoly::AbLetter::B);
    let d_ab = crate::ncpoly::cd_expand(&CdPoly::var(CdLetter::D));
    Ok(raised == &(&ab_index(&low)? * &c_ab) - &(&below_star * &d_ab))
}

/// Checks that the semisuspension ab-indices of two complexes sum to those
/// of their union and intersection.
pub fn semisusp_inclusion_exclusion_check(
    gamma: &SimplicialComplex,
    delta: &SimplicialComplex,
    n: i64,
) -> Result<bool, ComplexError> {
    let lhs = ab_index(&semisuspension(gamma, n)?)? + ab_index(&semisuspension(delta, n)?)?;
    let union = gamma.union(delta)?;
    let meet = gamma.intersection(delta)?;
    let rhs = ab_index(&semisuspension(&meet, n)?)? + ab_index(&semisuspension(&union, n)?)?;
    Ok(lhs == rhs)
}

/// Rebuilds the cd-index of a semisuspension from facet intersections. Each
/// distinct intersection F of a nonempty set of facets contributes the
/// negated reduced Euler characteristic of its link times the cd-index of
/// the face poset of F times that of `omega_poset(n - dim F)`; the term for
/// an empty intersection degenerates to the negated reduced Euler
/// characteristic of the whole complex times [`ball_cd`].
pub fn semisusp_via_intersections(
    gamma: &SimplicialComplex,
    n: i64,
) -> Result<CdPoly, ComplexError> {
    let dim = gamma.dim();
    if n < 1 || n < dim + 1 {
        return Err(ComplexError::DimensionTooLarge { dim, n });
    }
    let mut meets: BTreeSet<Face> = gamma.facets.iter().cloned().collect();
    loop {
        let mut fresh: Vec<Face> = Vec::new();
        for f in &meets {
            for g in &gamma.facets {
                let h = f & g;
                if !meets.contains(&h) && !fresh.contains(&h) {
                    fresh.push(h);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        meets.extend(fresh);
    }
    let mut total = CdPoly::zero();
    for f in &meets {
        let tilde = gamma.link(f)?.reduced_euler_characteristic();
        if tilde == 0 {
            continue;
        }
        let term = if f.is_empty() {
            ball_cd(n)
        } else {
            let simplex = face_poset_classical(&SimplicialComplex::new([f.clone()])?, false)?;
            let psi = ab_to_cd(&ab_index(&simplex)?)?;
            let omega = ab_to_cd(&ab_index(&omega_poset(n - (f.len() as i64 - 1))?)?)?;
            &psi * &omega
        };
        total = &total - &term.scale(&int(tilde));
    }
    Ok(total)
}

fn empty_complex() -> SimplicialComplex {
    SimplicialComplex::new([Face::new()]).expect("the smallest complex is valid")
}

/// Evaluates the alternating sum of semisuspension ab-indices over the
/// faces of a subdivided n-cell and reports whether it vanishes.
///
/// `gamma` is the boundary subdivision of the cell, `lambda` a refinement
/// of it, and `carrier` sends each vertex of `lambda` to the smallest face
/// of `gamma` whose closure contains it. The carrier of a larger face is
/// the union of its vertex carriers and must again be a `gamma` face of at
/// least the same size. Both interiors stay implicit: the sum has one term
/// for the empty face, one per nonempty `gamma` face restricted through the
/// carrier map, and one for the interior cell, whose poset is the face
/// poset of `lambda` with a top adjoined.
pub fn check_local_relation(
    gamma: &SimplicialComplex,
    lambda: &SimplicialComplex,
    carrier: &BTreeMap<Face, Face>,
    n: i64,
) -> Result<bool, ComplexError> {
    for (part, name) in [(gamma, "coarse"), (lambda, "fine")] {
        if part.dim() != n - 1 {
            return Err(ComplexError::BadParameter(format!(
                "the {name} subdivision must have dimension {}, got {}",
                n - 1,
                part.dim()
            )));
        }
    }
    for (x, f) in carrier {
        if !lambda.contains(x) || x.is_empty() {
            return Err(ComplexError::BadCarrier(format!(
                "`{}` is not a nonempty face of the refinement",
                face_id(x)
            )));
        }
        if !gamma.contains(f) {
            return Err(ComplexError::BadCarrier(format!(
                "`{}` is sent to `{}`, which is not a face",
                face_id(x),
                face_id(f)
            )));
        }
    }
    let mut sigma: BTreeMap<&Face, Face> = BTreeMap::new();
    for x in lambda.faces() {
        if x.is_empty() {
            continue;
        }
        let mut image = Face::new();
        for v in x {
            let vertex = face(&[v]);
            match carrier.get(&vertex) {
                Some(f) => image.extend(f.iter().cloned()),
                None => {
                    return Err(ComplexError::BadCarrier(format!(
                        "no carrier for vertex `{v}`"
                    )));
                }
            }
        }
        if !gamma.contains(&image) {
            return Err(ComplexError::BadCarrier(format!(
                "the vertex carriers of `{}` span `{}`, which is not a face",
                face_id(x),
                face_id(&image)
            )));
        }
        if image.len() < x.len() {
            return Err(ComplexError::BadCarrier(format!(
                "the carrier of `{}` has fewer vertices than the face itself",
                face_id(x)
            )));
        }
        if let Some(listed) = carrier.get(x) {
            if *listed != image {
                return Err(ComplexError::BadCarrier(format!(
                    "the listed carrier of `{}` disagrees with its vertex carriers",
                    face_id(x)
                )));
            }
        }
        sigma.insert(x, image);
    }
    let signed = |term: AbPoly, gap: i64| {
        if gap % 2 == 0 {
            term
        } else {
            term.scale(&int(-1))
        }
    };
    let mut sum = signed(ab_index(&semisuspension(&empty_complex(), n)?)?, n + 1);
    for f in gamma.faces() {
        if f.is_empty() {
            continue;
        }
        let restricted: Vec<Face> = sigma
            .iter()
            .filter(|(_, image)| image.is_subset(f))
            .map(|(x, _)| (*x).clone())
            .collect();
        let part = if restricted.is_empty() {
            empty_complex()
        } else {
            SimplicialComplex::new(restricted)?
        };
        let term = ab_index(&semisuspension(&part, n)?)?;
        sum = sum + signed(term, n + 1 - f.len() as i64);
    }
    sum = sum + ab_index(&face_poset_classical(lambda, true)?)?;
    Ok(sum.is_zero())
}

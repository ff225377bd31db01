//! Shared generators for randomized integration tests.

use cdindex::poset::{Poset, PosetSpec};
use cdindex::rat::int;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Builds a random bounded layered poset with rank span between 2 and
/// `max_span`, occasional rank-jumping relations, and random zeta values in
/// {-3..3} on every odd-rank-difference pair.
pub fn random_odd_zeta_poset(rng: &mut ChaCha8Rng, max_span: i64) -> Poset {
    let span = rng.gen_range(2..=max_span);
    let mut layers: Vec<Vec<String>> = vec![vec!["bot".to_string()]];
    for r in 1..span {
        let width = rng.gen_range(1..=3);
        layers.push((0..width).map(|i| format!("n{r}_{i}")).collect());
    }
    layers.push(vec!["top".to_string()]);

    let mut spec = PosetSpec {
        bottom: Some("bot".to_string()),
        top: Some("top".to_string()),
        ..Default::default()
    };
    for (r, layer) in layers.iter().enumerate() {
        for id in layer {
            spec.elements.push((id.clone(), r as i64));
        }
    }
    for r in 1..layers.len() {
        let below = &layers[r - 1];
        let mut covered = vec![false; below.len()];
        for id in &layers[r] {
            let mut any = false;
            while !any {
                for (b, parent) in below.iter().enumerate() {
                    if rng.gen_bool(0.6) {
                        spec.relations.push((parent.clone(), id.clone()));
                        covered[b] = true;
                        any = true;
                    }
                }
            }
        }
        for (b, parent) in below.iter().enumerate() {
            if !covered[b] {
                let child = &layers[r][rng.gen_range(0..layers[r].len())];
                spec.relations.push((parent.clone(), child.clone()));
            }
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let low = rng.gen_range(0..layers.len() - 2);
        let high = rng.gen_range(low + 2..layers.len());
        let from = &layers[low][rng.gen_range(0..layers[low].len())];
        let to = &layers[high][rng.gen_range(0..layers[high].len())];
        spec.relations.push((from.clone(), to.clone()));
    }

    let skeleton = spec
        .clone()
        .build()
        .expect("a layered skeleton is a valid poset");
    for i in 0..skeleton.len() {
        for j in 0..skeleton.len() {
            if skeleton.lt(i, j) && (skeleton.rank(j) - skeleton.rank(i)) % 2 != 0 {
                spec.zeta.push((
                    skeleton.id(i).to_string(),
                    skeleton.id(j).to_string(),
                    int(rng.gen_range(-3..=3)),
                ));
            }
        }
    }
    spec.build().expect("odd zeta values keep the poset valid")
}

/// Builds a random Eulerian poset by completing the even-rank zeta values
/// of a random odd-assigned layered poset.
pub fn random_eulerian_poset(rng: &mut ChaCha8Rng, max_span: i64) -> Poset {
    random_odd_zeta_poset(rng, max_span)
        .complete_eulerian()
        .expect("odd-only assignments always complete")
}

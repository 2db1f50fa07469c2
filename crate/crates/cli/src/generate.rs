//! Seeded instance families.

use std::fmt;
use std::str::FromStr;

use pendant_core::{Digraph, Vertex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    BidirectedComplete,
    BidirectedCompleteMinusArc,
    StarOrientation,
    TransitiveTournament,
    RandomTournament,
    RandomDigraph,
    RandomSymmetric,
    RandomEulerian,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::BidirectedComplete,
        Family::BidirectedCompleteMinusArc,
        Family::StarOrientation,
        Family::TransitiveTournament,
        Family::RandomTournament,
        Family::RandomDigraph,
        Family::RandomSymmetric,
        Family::RandomEulerian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::BidirectedComplete => "bidirected-complete",
            Family::BidirectedCompleteMinusArc => "bidirected-complete-minus-arc",
            Family::StarOrientation => "star-orientation",
            Family::TransitiveTournament => "transitive-tournament",
            Family::RandomTournament => "random-tournament",
            Family::RandomDigraph => "random-digraph",
            Family::RandomSymmetric => "random-symmetric",
            Family::RandomEulerian => "random-eulerian",
        }
    }

    fn uses_p(self) -> bool {
        matches!(
            self,
            Family::RandomDigraph | Family::RandomSymmetric | Family::RandomEulerian
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GenError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GenError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family} needs n >= {min}, got {n}")]
    TooSmall { family: Family, min: usize, n: usize },
    #[error("p must lie in [0, 1], got {0}")]
    BadProbability(f64),
    #[error("{0} did not produce a valid instance after {1} attempts")]
    Exhausted(Family, usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    pub family: Family,
    pub n: usize,
    /// Arc probability; for random-eulerian, extra cycles per vertex.
    pub p: f64,
    pub seed: u64,
}

impl GenParams {
    /// Comment lines recording how the instance was made.
    pub fn header(&self) -> Vec<String> {
        let mut line = format!("family {} n {}", self.family, self.n);
        if self.family.uses_p() {
            line.push_str(&format!(" p {}", self.p));
        }
        line.push_str(&format!(" seed {}", self.seed));
        vec![line]
    }
}

const EULERIAN_ATTEMPTS: usize = 64;

pub fn generate(params: &GenParams) -> Result<Digraph, GenError> {
    let GenParams { family, n, p, seed } = *params;
    let min = match family {
        Family::RandomEulerian | Family::BidirectedCompleteMinusArc => 2,
        _ => 1,
    };
    if n < min {
        return Err(GenError::TooSmall { family, min, n });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::BadProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = match family {
        Family::BidirectedComplete => Digraph::bidirected_complete(n),
        Family::BidirectedCompleteMinusArc => {
            let u = rng.random_range(0..n);
            let mut v = rng.random_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            Digraph::bidirected_complete(n).without_arcs(&[(u, v)])
        }
        Family::StarOrientation => {
            let arcs: Vec<_> = (1..n).map(|v| (0, v)).collect();
            Digraph::new(n, &arcs).expect("star arcs are simple")
        }
        Family::TransitiveTournament => {
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    arcs.push((u, v));
                }
            }
            Digraph::new(n, &arcs).expect("tournament arcs are simple")
        }
        Family::RandomTournament => {
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    arcs.push(if rng.random_bool(0.5) { (u, v) } else { (v, u) });
                }
            }
            Digraph::new(n, &arcs).expect("tournament arcs are simple")
        }
        Family::RandomDigraph => {
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.random_bool(p) {
                        arcs.push((u, v));
                    }
                }
            }
            Digraph::new(n, &arcs).expect("distinct pairs")
        }
        Family::RandomSymmetric => {
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        arcs.push((u, v));
                        arcs.push((v, u));
                    }
                }
            }
            Digraph::new(n, &arcs).expect("distinct pairs")
        }
        Family::RandomEulerian => {
            let mut found = None;
            for _ in 0..EULERIAN_ATTEMPTS {
                let d = random_eulerian(&mut rng, n, p);
                if d.is_eulerian() {
                    found = Some(d);
                    break;
                }
            }
            found.ok_or(GenError::Exhausted(family, EULERIAN_ATTEMPTS))?
        }
    };
    debug_assert!(satisfies(family, &d));
    Ok(d)
}

/// A Hamiltonian cycle on a random order, then up to `p * n` further
/// cycles, each kept only if all of its arcs are new.
fn random_eulerian(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    let mut order: Vec<Vertex> = (0..n).collect();
    order.shuffle(rng);
    let mut used = vec![false; n * n];
    let mut arcs = Vec::new();
    let add_cycle = |cycle: &[Vertex], used: &mut Vec<bool>, arcs: &mut Vec<(Vertex, Vertex)>| {
        let pairs: Vec<_> = (0..cycle.len())
            .map(|i| (cycle[i], cycle[(i + 1) % cycle.len()]))
            .collect();
        if pairs.iter().all(|&(u, v)| !used[u * n + v]) {
            for &(u, v) in &pairs {
                used[u * n + v] = true;
                arcs.push((u, v));
            }
        }
    };
    add_cycle(&order, &mut used, &mut arcs);
    let extra = (p * n as f64).round() as usize;
    for _ in 0..extra {
        let len = rng.random_range(2..=n);
        let mut pool: Vec<Vertex> = (0..n).collect();
        pool.shuffle(rng);
        add_cycle(&pool[..len], &mut used, &mut arcs);
    }
    Digraph::new(n, &arcs).expect("each arc added once")
}

/// The defining predicate of each family.
pub fn satisfies(family: Family, d: &Digraph) -> bool {
    let n = d.order();
    let is_tournament = || {
        (0..n).all(|u| (u + 1..n).all(|v| d.has_arc(u, v) != d.has_arc(v, u)))
    };
    match family {
        Family::BidirectedComplete => d.size() == n * (n - 1),
        Family::BidirectedCompleteMinusArc => d.size() + 1 == n * (n - 1),
        Family::StarOrientation => {
            d.size() + 1 == n && (1..n).all(|v| d.in_degree(v) == 1 && d.out_degree(v) == 0)
        }
        Family::TransitiveTournament => {
            is_tournament() && (0..n).all(|u| (u + 1..n).all(|v| d.has_arc(u, v)))
        }
        Family::RandomTournament => is_tournament(),
        Family::RandomDigraph => true,
        Family::RandomSymmetric => d.is_symmetric(),
        Family::RandomEulerian => d.is_eulerian(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(family: Family, n: usize, p: f64, seed: u64) -> Digraph {
        generate(&GenParams { family, n, p, seed }).unwrap()
    }

    #[test]
    fn named_families() {
        assert_eq!(gen(Family::BidirectedComplete, 4, 0.0, 0).size(), 12);
        let star = gen(Family::StarOrientation, 5, 0.0, 0);
        assert_eq!(star.out_degree(0), 4);
        assert_eq!(star.degree_summary().delta_zero, 0);
        let tt = gen(Family::TransitiveTournament, 4, 0.0, 0);
        assert!(!tt.is_strong());
        assert!(!tt.complement().is_strong());
    }

    #[test]
    fn every_family_meets_its_predicate() {
        for family in Family::ALL {
            for seed in 0..20 {
                let d = gen(family, 6, 0.4, seed);
                assert!(satisfies(family, &d), "{family} seed {seed}");
            }
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = gen(Family::RandomEulerian, 7, 0.5, 99);
        let b = gen(Family::RandomEulerian, 7, 0.5, 99);
        assert_eq!(a, b);
        assert_ne!(gen(Family::RandomDigraph, 7, 0.5, 1), gen(Family::RandomDigraph, 7, 0.5, 2));
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }
}

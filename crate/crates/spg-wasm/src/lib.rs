//! Browser bindings for the permutation-graph demo in `www/index.html`.
//!
//! The page draws the permutation diagram and calls into [`GraphDemo`] for
//! three things: the neighborhood of a clicked vertex, a shortest path
//! between two picked vertices, and a maximum clique with an optimal coloring.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spg::algos;
use spg::core::Permutation;
use spg::gen::random_permutation;
use spg::pgraph::{Backend, SuccinctPermGraph};
use wasm_bindgen::prelude::*;

#[wasm_bindgen]
pub struct GraphDemo {
    g: SuccinctPermGraph,
}

fn js(e: spg::Error) -> JsError {
    JsError::new(&e.to_string())
}

fn ids(v: Vec<usize>) -> Vec<u32> {
    v.into_iter().map(|x| x as u32).collect()
}

impl GraphDemo {
    /// `text`: the values `Π[1..=n]`, separated by spaces or commas.
    pub fn parse(text: &str) -> spg::Result<GraphDemo> {
        let vals = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| spg::Error::Format(format!("not a number: {t:?}"))))
            .collect::<spg::Result<Vec<_>>>()?;
        if vals.is_empty() {
            return Err(spg::Error::Format("enter at least one value".into()));
        }
        Ok(GraphDemo { g: SuccinctPermGraph::build(&Permutation::new(vals)?, Backend::Array)? })
    }

    pub fn try_neighbors(&self, v: usize) -> spg::Result<Vec<u32>> {
        Ok(ids(self.g.neighbors(v)?))
    }

    /// Empty when unreachable.
    pub fn try_spath(&self, u: usize, v: usize) -> spg::Result<Vec<u32>> {
        Ok(match self.g.distance(u, v)? {
            None => Vec::new(),
            Some(_) => ids(self.g.spath(u, v)?),
        })
    }
}

#[wasm_bindgen]
impl GraphDemo {
    #[wasm_bindgen(constructor)]
    pub fn new(text: &str) -> Result<GraphDemo, JsError> {
        Self::parse(text).map_err(js)
    }

    /// Uniform random permutation graph on `n` vertices.
    pub fn random(n: usize, seed: u32) -> GraphDemo {
        let p = random_permutation(&mut ChaCha8Rng::seed_from_u64(seed as u64), n.max(1));
        GraphDemo { g: SuccinctPermGraph::build(&p, Backend::Array).expect("random permutation is valid") }
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    /// `Π[1..=n]`, for drawing the diagram.
    pub fn positions(&self) -> Vec<u32> {
        (1..=self.g.n()).map(|v| self.g.pi(v).unwrap() as u32).collect()
    }

    /// Per vertex: 1 = A, 2 = B, 3 = both (isolated), 0 = neither.
    pub fn roles(&self) -> Vec<u8> {
        (1..=self.g.n()).map(|v| self.g.is_a(v).unwrap() as u8 | (self.g.is_b(v).unwrap() as u8) << 1).collect()
    }

    pub fn neighbors(&self, v: usize) -> Result<Vec<u32>, JsError> {
        self.try_neighbors(v).map_err(js)
    }

    /// -1 when unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Result<i32, JsError> {
        Ok(self.g.distance(u, v).map_err(js)?.map_or(-1, |d| d as i32))
    }

    pub fn spath(&self, u: usize, v: usize) -> Result<Vec<u32>, JsError> {
        self.try_spath(u, v).map_err(js)
    }

    /// Color of each vertex; the largest color equals the clique size.
    pub fn coloring(&self) -> Vec<u32> {
        ids(algos::max_clique_min_coloring(&self.g).colors)
    }

    pub fn max_clique(&self) -> Vec<u32> {
        ids(algos::max_clique_min_coloring(&self.g).clique)
    }

    /// Bits used by the structure, summed over components.
    pub fn bits(&self) -> usize {
        self.g.space_report().total()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ELEVEN: &str = "5 3 10 9 1 4 2 7 11 8 6";

    #[test]
    fn demo_operations() {
        let d = GraphDemo::parse(ELEVEN).unwrap();
        assert_eq!(d.n(), 11);
        assert_eq!(d.positions()[4], 1);
        assert_eq!(d.try_neighbors(3).unwrap(), vec![4, 5, 6, 7, 8, 10, 11]);
        let p = d.try_spath(5, 9).unwrap();
        assert_eq!((p.len(), p[0], p[3]), (4, 5, 9));
        assert_eq!(d.distance(5, 9).unwrap(), 3);
        let roles = d.roles();
        assert_eq!((roles[0], roles[4], roles[3]), (1, 2, 0));
        let colors = d.coloring();
        assert_eq!(*colors.iter().max().unwrap() as usize, d.max_clique().len());
        assert!(d.bits() > 0);
    }

    #[test]
    fn parse_and_random() {
        assert!(GraphDemo::parse("1, 2,3").is_ok());
        assert!(GraphDemo::parse("1 1").is_err());
        assert!(GraphDemo::parse("").is_err());
        assert!(GraphDemo::parse("a").is_err());
        let d = GraphDemo::parse("1 2 3").unwrap();
        assert!(d.try_spath(1, 3).unwrap().is_empty());
        assert!(d.try_neighbors(4).is_err());
        assert_eq!(GraphDemo::random(20, 3).positions(), GraphDemo::random(20, 3).positions());
        assert_eq!(GraphDemo::random(0, 1).n(), 1);
    }
}

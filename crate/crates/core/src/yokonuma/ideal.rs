use std::collections::VecDeque;

use num_rational::BigRational;
use serde::Serialize;

use super::algebra::{AlgebraElement, YokonumaAlgebra};
use super::linalg::RowEchelon;
use crate::error::Result;
use crate::rep_theory::require_ytl_rank;

type Alg = YokonumaAlgebra<BigRational>;
type Elem = AlgebraElement<BigRational>;

/// The rows `b_1 · G_{1,2} · b_2` over all pairs of basis words, in
/// coordinates. Rows are produced on demand; nothing is stored beyond the
/// `d^n n!` right factors of the row currently being emitted.
pub struct IdealMatrix<'a> {
    alg: &'a Alg,
    generator: Elem,
}

impl<'a> IdealMatrix<'a> {
    pub fn new(alg: &'a Alg) -> Result<Self> {
        require_ytl_rank(alg.n())?;
        Ok(IdealMatrix { alg, generator: alg.ttl_generator(1)? })
    }

    /// `(d^n n!)²`.
    pub fn row_count(&self) -> usize {
        self.alg.dimension() * self.alg.dimension()
    }

    pub fn columns(&self) -> usize {
        self.alg.dimension()
    }

    /// Rows ordered by right factor, then left factor.
    pub fn rows(&self) -> impl Iterator<Item = Vec<BigRational>> + '_ {
        let dim = self.alg.dimension();
        (0..dim).flat_map(move |right| {
            let tail = self
                .alg
                .multiply(&self.generator, &unit(self.alg, right))
                .expect("same algebra");
            (0..dim).map(move |left| {
                let row = self.alg.multiply(&unit(self.alg, left), &tail).expect("same algebra");
                self.alg.to_dense(&row)
            })
        })
    }
}

fn unit(alg: &Alg, index: usize) -> Elem {
    let w = alg.framed_word(index);
    alg.basis_element(&w.framing, &w.braiding).expect("index in range")
}

/// How the row space of the ideal is produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealRoute {
    /// Every row of [`IdealMatrix`].
    Literal,
    /// `g_x G g_v` for all braidings, closed under left and right
    /// multiplication by each `t_j`. Left or right multiplication by a
    /// framing permutes coordinates, so every literal row `t^a g_x G t^b g_v`
    /// lies in this span and conversely.
    Pairs,
    /// `G` closed under left and right multiplication by all generators.
    Closure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealRank {
    pub route: IdealRoute,
    pub candidate_rows: usize,
    pub rank: usize,
}

/// A row basis of the ideal generated by `G_{1,2}`.
pub fn ideal_echelon(alg: &Alg, route: IdealRoute) -> Result<(RowEchelon, IdealRank)> {
    require_ytl_rank(alg.n())?;
    let mut ech = RowEchelon::new(alg.dimension());
    let generator = alg.ttl_generator(1)?;
    let mut candidates = 0;
    match route {
        IdealRoute::Literal => {
            let matrix = IdealMatrix::new(alg)?;
            for row in matrix.rows() {
                candidates += 1;
                ech.insert(row);
            }
        }
        IdealRoute::Pairs => {
            let seeds = braidings(alg)
                .iter()
                .flat_map(|x| braidings(alg).into_iter().map(move |v| (x.clone(), v)))
                .map(|(x, v)| {
                    let left = alg.multiply(&x, &generator)?;
                    alg.multiply(&left, &v)
                })
                .collect::<Result<Vec<_>>>()?;
            let maps = framing_maps(alg);
            candidates = close(alg, &mut ech, seeds, &maps)?;
        }
        IdealRoute::Closure => {
            let mut maps = framing_maps(alg);
            maps.extend((1..alg.n()).flat_map(|i| [Map::LeftG(i), Map::RightG(i)]));
            candidates = close(alg, &mut ech, vec![generator], &maps)?;
        }
    }
    let rank = ech.rank();
    Ok((ech, IdealRank { route, candidate_rows: candidates, rank }))
}

fn braidings(alg: &Alg) -> Vec<Elem> {
    crate::ytl_basis::enumerate_hn(alg.n())
        .iter()
        .map(|g| alg.basis_element(&vec![0; alg.n()], g).expect("valid braiding"))
        .collect()
}

#[derive(Clone, Copy, Debug)]
enum Map {
    LeftT(usize),
    RightT(usize),
    LeftG(usize),
    RightG(usize),
}

fn framing_maps(alg: &Alg) -> Vec<Map> {
    (1..=alg.n()).flat_map(|j| [Map::LeftT(j), Map::RightT(j)]).collect()
}

fn apply(alg: &Alg, map: Map, x: &Elem) -> Result<Elem> {
    match map {
        Map::LeftT(j) => alg.left_t(x, j),
        Map::RightT(j) => alg.right_t(x, j),
        Map::LeftG(i) => alg.multiply(&alg.g(i)?, x),
        Map::RightG(i) => alg.multiply(x, &alg.g(i)?),
    }
}

/// Grows `ech` to the smallest subspace containing `seeds` and stable under
/// `maps`. Every vector that enlarges the span is queued so its images get
/// tested too. Returns the number of vectors reduced.
fn close(alg: &Alg, ech: &mut RowEchelon, seeds: Vec<Elem>, maps: &[Map]) -> Result<usize> {
    let mut queue: VecDeque<Elem> = VecDeque::new();
    let mut reduced = 0;
    for s in seeds {
        reduced += 1;
        if ech.insert(alg.to_dense(&s)) {
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        if ech.is_full() {
            break;
        }
        for &m in maps {
            let y = apply(alg, m, &x)?;
            reduced += 1;
            if ech.insert(alg.to_dense(&y)) {
                queue.push_back(y);
            }
        }
    }
    Ok(reduced)
}

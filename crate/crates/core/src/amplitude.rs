//! Vacuum Feynman amplitudes over a finite field, in coordinate and momentum
//! space, with the propagator `Δ(x) = a + b δ(x)`.
//!
//! Only the pattern of vanishing arguments matters, so every sum is reduced
//! to a histogram of "how many edges see a zero" and then weighted exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::enumerate::{par_fold, state_count, Budget, Odometer};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Propagator {
    pub a: BigRational,
    pub b: BigRational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    Coordinate,
    Momentum,
}

impl Propagator {
    pub fn new(a: BigRational, b: BigRational) -> Propagator {
        Propagator { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Propagator {
        Propagator::new(BigInt::from(a).into(), BigInt::from(b).into())
    }

    /// `‖x‖ = 1 − δ(x)`.
    pub fn norm() -> Propagator {
        Propagator::from_ints(1, -1)
    }

    pub fn value(&self, at_zero: bool) -> BigRational {
        if at_zero {
            &self.a + &self.b
        } else {
            self.a.clone()
        }
    }

    /// `Σ_j hist[j] · Δ(0)^j · Δ(≠0)^{m − j}`.
    fn weigh(&self, hist: &[u64]) -> BigRational {
        let m = hist.len() - 1;
        let zero = self.value(true);
        hist.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| {
                BigRational::from(BigInt::from(c))
                    * num_traits::pow(zero.clone(), j)
                    * num_traits::pow(self.a.clone(), m - j)
            })
            .fold(BigRational::zero(), |acc, t| acc + t)
    }
}

fn merge(mut x: Vec<u64>, y: Vec<u64>) -> Vec<u64> {
    x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
    x
}

/// Histogram over `x ∈ F_q^V` of the number of edges with `x_{i(e)} = x_{f(e)}`.
/// Vertices listed in `pinned` are held at zero.
fn coordinate_histogram(g: &Multigraph, q: u64, pinned: &[usize], budget: Budget) -> Result<Vec<u64>> {
    let free: Vec<usize> = (0..g.vertex_count()).filter(|v| !pinned.contains(v)).collect();
    let total = budget.check(state_count(q, free.len()))?;
    let m = g.edge_count();
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.tail, e.head)).collect();
    let hist = par_fold(
        total,
        |range| {
            let mut hist = vec![0u64; m + 1];
            let mut odo = Odometer::at(range.start, free.len(), q as u32);
            let mut x = vec![0u32; g.vertex_count()];
            for _ in range {
                for (k, &v) in free.iter().enumerate() {
                    x[v] = odo.digits()[k];
                }
                hist[edges.iter().filter(|&&(t, h)| x[t] == x[h]).count()] += 1;
                odo.advance();
            }
            hist
        },
        merge,
    );
    Ok(hist.unwrap_or_else(|| vec![0; m + 1]))
}

/// Histogram over the conserved momenta `k ∈ ker ε ⊆ F_q^E` of the number of
/// vanishing `k_e`. The kernel is enumerated through its free coordinates.
fn momentum_histogram(g: &Multigraph, field: &Field, budget: Budget) -> Result<Vec<u64>> {
    let m = g.edge_count();
    let (rref, pivots) = g.incidence_matrix(field).rref();
    let free: Vec<usize> = (0..m).filter(|j| !pivots.contains(j)).collect();
    let q = field.order();
    let total = budget.check(state_count(q, free.len()))?;
    // k_{pivot_i} = −Σ_j R[i][free_j] t_j
    let coef: Vec<Vec<u32>> = (0..pivots.len())
        .map(|i| free.iter().map(|&j| field.neg_code(rref.code(i, j))).collect())
        .collect();
    let hist = par_fold(
        total,
        |range| {
            let mut hist = vec![0u64; m + 1];
            let mut odo = Odometer::at(range.start, free.len(), q as u32);
            for _ in range {
                let t = odo.digits();
                let mut zeros = t.iter().filter(|&&x| x == 0).count();
                for row in &coef {
                    let k = row
                        .iter()
                        .zip(t)
                        .fold(0, |acc, (&c, &x)| field.add_codes(acc, field.mul_codes(c, x)));
                    zeros += usize::from(k == 0);
                }
                hist[zeros] += 1;
                odo.advance();
            }
            hist
        },
        merge,
    );
    Ok(hist.unwrap_or_else(|| vec![0; m + 1]))
}

/// `ℱ_G(q; a, b) = Σ_{x ∈ F_q^V} Π_e Δ(x_{i(e)} − x_{f(e)})`.
pub fn vacuum_fa_coordinate(g: &Multigraph, field: &Field, p: &Propagator, budget: Budget) -> Result<BigRational> {
    Ok(p.weigh(&coordinate_histogram(g, field.order(), &[], budget)?))
}

/// `ℱ′_G`: the coordinate sum with one vertex per component held at zero.
pub fn vacuum_fa_coordinate_pinned(
    g: &Multigraph,
    field: &Field,
    p: &Propagator,
    budget: Budget,
) -> Result<BigRational> {
    let mut pinned = Vec::new();
    let mut seen = vec![false; g.vertex_count()];
    for v in 0..g.vertex_count() {
        if seen[v] {
            continue;
        }
        pinned.push(v);
        // mark v's component
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(u) = stack.pop() {
            for e in g.edges() {
                for (x, y) in [(e.tail, e.head), (e.head, e.tail)] {
                    if x == u && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
    }
    Ok(p.weigh(&coordinate_histogram(g, field.order(), &pinned, budget)?))
}

/// `ℱ̃_G(q; ã, b̃) = Σ_{k ∈ F_q^E} Π_e Δ̃(k_e) Π_v δ(Σ_e ε_{ve} k_e)`.
pub fn vacuum_fa_momentum(g: &Multigraph, field: &Field, p: &Propagator, budget: Budget) -> Result<BigRational> {
    Ok(p.weigh(&momentum_histogram(g, field, budget)?))
}

pub fn vacuum_fa(g: &Multigraph, field: &Field, p: &Propagator, space: Space, budget: Budget) -> Result<BigRational> {
    match space {
        Space::Coordinate => vacuum_fa_coordinate(g, field, p, budget),
        Space::Momentum => vacuum_fa_momentum(g, field, p, budget),
    }
}

/// Both sides of `q^{|V|} ℱ̃_G(q; a, b) = ℱ_G(q; b, aq)`.
pub fn fourier_duality_sides(
    g: &Multigraph,
    field: &Field,
    p: &Propagator,
    budget: Budget,
) -> Result<(BigRational, BigRational)> {
    let q = BigRational::from(BigInt::from(field.order()));
    let lhs = num_traits::pow(q.clone(), g.vertex_count()) * vacuum_fa_momentum(g, field, p, budget)?;
    let swapped = Propagator::new(p.b.clone(), &p.a * &q);
    let rhs = vacuum_fa_coordinate(g, field, &swapped, budget)?;
    Ok((lhs, rhs))
}

pub fn fourier_duality_check(g: &Multigraph, field: &Field, p: &Propagator, budget: Budget) -> Result<bool> {
    let (lhs, rhs) = fourier_duality_sides(g, field, p, budget)?;
    Ok(lhs == rhs)
}

/// Coordinate: `ℱ_G = a ℱ_{G′} + b ℱ_{G″}`. Momentum: `ℱ̃_G = b̃ ℱ̃_{G′} + ã ℱ̃_{G″}`.
pub fn deletion_contraction_check(
    g: &Multigraph,
    edge: usize,
    field: &Field,
    p: &Propagator,
    space: Space,
    budget: Budget,
) -> Result<bool> {
    if edge >= g.edge_count() {
        return Err(Error::IndexOutOfRange {
            index: edge,
            len: g.edge_count(),
        });
    }
    if g.is_loop(edge) || g.is_isthmus(edge) {
        return Err(Error::LoopOrIsthmus(g.edges()[edge].id.clone()));
    }
    let whole = vacuum_fa(g, field, p, space, budget)?;
    let deleted = vacuum_fa(&g.delete_edge(edge), field, p, space, budget)?;
    let contracted = vacuum_fa(&g.contract_edge(edge), field, p, space, budget)?;
    let (cd, cc) = match space {
        Space::Coordinate => (&p.a, &p.b),
        Space::Momentum => (&p.b, &p.a),
    };
    Ok(whole == cd * deleted + cc * contracted)
}

fn rpow(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// Closed form of the amplitude through the dichromatic polynomial:
/// coordinate `a^{|E|−|V|} b^{|V|} Q_G(qa/b, b/a)`,
/// momentum `ã^{|V|} b̃^{|E|−|V|} Q_G(b̃/ã, qã/b̃)`.
pub fn fa_closed_form(g: &Multigraph, q: u64, p: &Propagator, space: Space, budget: Budget) -> Result<BigRational> {
    if p.a.is_zero() || p.b.is_zero() {
        return Err(Error::ZeroPropagatorConstant);
    }
    let dichromatic = g.dichromatic_poly(budget)?;
    let q = BigRational::from(BigInt::from(q));
    let (v, e) = (g.vertex_count() as i64, g.edge_count() as i64);
    let (a, b) = (&p.a, &p.b);
    match space {
        Space::Coordinate => {
            let scale = rpow(a, e - v) * rpow(b, v);
            Ok(scale * dichromatic.eval(&(&q * a / b), &(b / a))?)
        }
        Space::Momentum => {
            let scale = rpow(a, v) * rpow(b, e - v);
            Ok(scale * dichromatic.eval(&(b / a), &(&q * a / b))?)
        }
    }
}

pub fn fa_closed_form_check(
    g: &Multigraph,
    field: &Field,
    p: &Propagator,
    space: Space,
    budget: Budget,
) -> Result<bool> {
    let closed = fa_closed_form(g, field.order(), p, space, budget)?;
    Ok(closed == vacuum_fa(g, field, p, space, budget)?)
}

/// `ℱ_G(q; 1, x − 1)` evaluated by the state sum.
pub fn bad_coloring_value(g: &Multigraph, field: &Field, x: &BigRational, budget: Budget) -> Result<BigRational> {
    let p = Propagator::new(BigRational::one(), x - BigRational::one());
    vacuum_fa_coordinate(g, field, &p, budget)
}

/// `ℱ̃_G(q; 1, x − 1)` evaluated by the state sum.
pub fn bad_flow_value(g: &Multigraph, field: &Field, x: &BigRational, budget: Budget) -> Result<BigRational> {
    let p = Propagator::new(BigRational::one(), x - BigRational::one());
    vacuum_fa_momentum(g, field, &p, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    fn int(n: i64) -> BigRational {
        BigInt::from(n).into()
    }

    fn k3() -> Multigraph {
        Multigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn c4() -> Multigraph {
        Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn coordinate_examples() {
        let k2 = Multigraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(vacuum_fa_coordinate(&k2, &gf(3), &Propagator::norm(), b()).unwrap(), int(6));
        let empty = Multigraph::from_edges(3, &[]).unwrap();
        assert_eq!(vacuum_fa_coordinate(&empty, &gf(5), &Propagator::from_ints(2, 7), b()).unwrap(), int(125));
        let p = k3().chromatic_poly(b()).unwrap();
        for q in [3, 5, 7] {
            assert_eq!(
                vacuum_fa_coordinate(&k3(), &gf(q), &Propagator::norm(), b()).unwrap(),
                p.eval(&int(q as i64))
            );
        }
    }

    #[test]
    fn momentum_examples() {
        let lp = Multigraph::from_edges(1, &[(0, 0)]).unwrap();
        assert_eq!(vacuum_fa_momentum(&lp, &gf(5), &Propagator::norm(), b()).unwrap(), int(4));
        let tree = Multigraph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(vacuum_fa_momentum(&tree, &gf(3), &Propagator::norm(), b()).unwrap(), int(0));
        let f = c4().flow_poly(b()).unwrap();
        assert_eq!(vacuum_fa_momentum(&c4(), &gf(5), &Propagator::norm(), b()).unwrap(), f.eval(&int(5)));
    }

    #[test]
    fn fourier_examples() {
        assert!(fourier_duality_check(&k3(), &gf(3), &Propagator::norm(), b()).unwrap());
        assert!(fourier_duality_check(&c4(), &gf(3), &Propagator::from_ints(2, 5), b()).unwrap());
        let empty = Multigraph::from_edges(2, &[]).unwrap();
        assert!(fourier_duality_check(&empty, &gf(3), &Propagator::from_ints(4, 1), b()).unwrap());
    }

    #[test]
    fn deletion_contraction_examples() {
        let p = Propagator::from_ints(2, -3);
        for g in [k3(), c4()] {
            for e in 0..g.edge_count() {
                for space in [Space::Coordinate, Space::Momentum] {
                    assert!(deletion_contraction_check(&g, e, &gf(3), &p, space, b()).unwrap());
                }
            }
        }
        let k2 = Multigraph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            deletion_contraction_check(&k2, 0, &gf(3), &p, Space::Coordinate, b()),
            Err(Error::LoopOrIsthmus(_))
        ));
    }

    #[test]
    fn closed_form_examples() {
        let n = fa_closed_form(&k3(), 3, &Propagator::norm(), Space::Coordinate, b()).unwrap();
        assert_eq!(n, int(6));
        let p = Propagator::new(BigRational::new((-1).into(), 2.into()), int(3));
        for space in [Space::Coordinate, Space::Momentum] {
            assert!(fa_closed_form_check(&c4(), &gf(5), &p, space, b()).unwrap());
        }
        assert_eq!(
            fa_closed_form(&k3(), 3, &Propagator::from_ints(0, 1), Space::Coordinate, b()),
            Err(Error::ZeroPropagatorConstant)
        );
    }

    #[test]
    fn pinned_sum_scales_by_components() {
        let g = Multigraph::from_edges(5, &[(0, 1), (1, 2), (3, 4), (3, 4)]).unwrap();
        let p = Propagator::from_ints(3, -1);
        let full = vacuum_fa_coordinate(&g, &gf(3), &p, b()).unwrap();
        let pinned = vacuum_fa_coordinate_pinned(&g, &gf(3), &p, b()).unwrap();
        assert_eq!(full, pinned * int(9));
    }

    #[test]
    fn reversal_invariance() {
        let p = Propagator::from_ints(2, 3);
        let g = c4();
        let base = vacuum_fa_coordinate(&g, &gf(5), &p, b()).unwrap();
        assert_eq!(vacuum_fa_coordinate(&g.reverse_edge(2), &gf(5), &p, b()).unwrap(), base);
        let mb = vacuum_fa_momentum(&g, &gf(5), &p, b()).unwrap();
        assert_eq!(vacuum_fa_momentum(&g.reverse_edge(2), &gf(5), &p, b()).unwrap(), mb);
    }

    #[test]
    fn bad_polynomials_match_state_sums() {
        let g = c4();
        let x = int(3);
        let bc = g.bad_coloring_poly(b()).unwrap().eval(&int(5), &x).unwrap();
        assert_eq!(bad_coloring_value(&g, &gf(5), &x, b()).unwrap(), bc);
        let bf = g.bad_flow_poly(b()).unwrap().eval(&int(5), &x).unwrap();
        assert_eq!(bad_flow_value(&g, &gf(5), &x, b()).unwrap(), bf);
        // the coordinate recursion with a = 1, b = x − 1
        let e = 0;
        let lhs = bad_coloring_value(&g, &gf(5), &x, b()).unwrap();
        let rhs = bad_coloring_value(&g.delete_edge(e), &gf(5), &x, b()).unwrap()
            + (&x - int(1)) * bad_coloring_value(&g.contract_edge(e), &gf(5), &x, b()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

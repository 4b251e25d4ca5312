//! Subset-sum identities relating `χ_M`, `χ_{M^⊥}`, and minors, the Tutte
//! convolution, the four-variable rank-polynomial identity, and their
//! graph forms. Everything is evaluated exactly at integer points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::enumerate::{state_count, Budget};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::matroid::{char_poly, tutte_poly, whitney_rank_poly, Matroid};
use crate::poly::{BiPoly, UniPoly};

/// Exact values of the two sides of one identity at one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sides {
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl Sides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

fn sign(k: usize) -> BigRational {
    if k.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

fn check_q(q: i64) -> Result<BigRational> {
    if q < 2 {
        return Err(Error::InvalidQ(q));
    }
    Ok(rat(q))
}

/// `ζ_q(1) = 1/(1 − 1/q)`.
pub fn zeta_plus(q: &BigRational) -> BigRational {
    (BigRational::one() - q.recip()).recip()
}

/// `ζ_q(−1) = 1/(1 − q)`.
pub fn zeta_minus(q: &BigRational) -> BigRational {
    (BigRational::one() - q).recip()
}

fn minor_budget<M: Matroid + ?Sized>(m: &M, budget: Budget) -> Result<()> {
    budget.check(state_count(3, m.len())).map(|_| ())
}

fn chi_at<M: Matroid>(m: &M, q: &BigRational, budget: Budget) -> Result<BigRational> {
    Ok(char_poly(m, budget)?.eval(q))
}

/// `χ_{M^⊥}(q)` from the dual's characteristic polynomial.
pub fn dual_chi<M: Matroid>(m: &M, q: i64, budget: Budget) -> Result<BigRational> {
    chi_at(&m.dual(), &rat(q), budget)
}

/// `(q−1)^{|E|} Σ_A (q/(1−q))^{|A|} χ_{M|_A}(q) / q^{r(A)}`.
pub fn theorem2_restriction_rhs<M: Matroid>(m: &M, q: i64, budget: Budget) -> Result<BigRational> {
    let qr = check_q(q)?;
    minor_budget(m, budget)?;
    let ratio = &qr / (BigRational::one() - &qr);
    let mut sum = BigRational::zero();
    for a in m.ground().subsets() {
        let chi = chi_at(&m.restrict(a), &qr, budget)?;
        sum += num_traits::pow(ratio.clone(), a.len()) * chi / num_traits::pow(qr.clone(), m.rank(a));
    }
    Ok(num_traits::pow(&qr - BigRational::one(), m.len()) * sum)
}

/// `q^{−r(E)} Σ_A (−1)^{|E|−|A|} (q−1)^{|A|} χ_{M/A}(q)`.
pub fn theorem2_contraction_rhs<M: Matroid>(m: &M, q: i64, budget: Budget) -> Result<BigRational> {
    let qr = check_q(q)?;
    minor_budget(m, budget)?;
    let mut sum = BigRational::zero();
    for a in m.ground().subsets() {
        let chi = chi_at(&m.contract(a), &qr, budget)?;
        sum += sign(m.len() - a.len()) * num_traits::pow(&qr - BigRational::one(), a.len()) * chi;
    }
    Ok(sum / num_traits::pow(qr, m.full_rank()))
}

/// The ζ-forms: `χ_{M^⊥}(q) ζ(−1)^{|E|} = Σ_A (−1)^{|E|−|A|} χ_{M|_A}(q)/q^{r(A)} ζ(1)^{|A|}`
/// and `χ_M(q)/q^{r(E)} ζ(1)^{|E|} = Σ_A ζ(−1)^{|A|} χ_{M^⊥/(E∖A)}(q)`.
pub fn zeta_forms<M: Matroid>(m: &M, q: i64, budget: Budget) -> Result<(Sides, Sides)> {
    let qr = check_q(q)?;
    minor_budget(m, budget)?;
    let (zp, zm) = (zeta_plus(&qr), zeta_minus(&qr));
    let n = m.len();
    let dual = m.dual();
    let mut rhs7 = BigRational::zero();
    let mut rhs8 = BigRational::zero();
    for a in m.ground().subsets() {
        let chi_r = chi_at(&m.restrict(a), &qr, budget)?;
        rhs7 += sign(n - a.len()) * chi_r / num_traits::pow(qr.clone(), m.rank(a)) * num_traits::pow(zp.clone(), a.len());
        let chi_c = chi_at(&dual.contract(m.ground().minus(a)), &qr, budget)?;
        rhs8 += num_traits::pow(zm.clone(), a.len()) * chi_c;
    }
    let lhs7 = chi_at(&dual, &qr, budget)? * num_traits::pow(zm, n);
    let lhs8 = chi_at(m, &qr, budget)? / num_traits::pow(qr.clone(), m.full_rank()) * num_traits::pow(zp, n);
    Ok((Sides { lhs: lhs7, rhs: rhs7 }, Sides { lhs: lhs8, rhs: rhs8 }))
}

pub fn zeta_forms_check<M: Matroid>(m: &M, q: i64, budget: Budget) -> Result<bool> {
    let (a, b) = zeta_forms(m, q, budget)?;
    Ok(a.holds() && b.holds())
}

/// `Σ_A T_{M|_A}(0, y) T_{M/A}(x, 0)`.
pub fn reiner_convolution<M: Matroid>(m: &M, budget: Budget) -> Result<BiPoly> {
    minor_budget(m, budget)?;
    let mut sum = BiPoly::zero();
    for a in m.ground().subsets() {
        let left = tutte_poly(&m.restrict(a), budget)?.at_u_zero();
        let right = tutte_poly(&m.contract(a), budget)?.at_v_zero();
        sum = &sum + &(&left * &right);
    }
    Ok(sum)
}

/// `T_M(x, y) = Σ_A T_{M|_A}(0, y) T_{M/A}(x, 0)` as polynomials.
pub fn reiner_convolution_check<M: Matroid>(m: &M, budget: Budget) -> Result<bool> {
    Ok(tutte_poly(m, budget)? == reiner_convolution(m, budget)?)
}

/// Both sides of
/// `R_M(λξ, xy) = Σ_A λ^{r(E)−r(A)} (−y)^{|A|−r(A)} R_{M|_A}(−λ, −x) R_{M/A}(ξ, y)`.
pub fn kung_identity<M: Matroid>(
    m: &M,
    lambda: &BigRational,
    xi: &BigRational,
    x: &BigRational,
    y: &BigRational,
    budget: Budget,
) -> Result<Sides> {
    minor_budget(m, budget)?;
    let lhs = whitney_rank_poly(m, budget)?.eval(&(lambda * xi), &(x * y))?;
    let r = m.full_rank();
    let mut rhs = BigRational::zero();
    for a in m.ground().subsets() {
        let ra = m.rank(a);
        let left = whitney_rank_poly(&m.restrict(a), budget)?.eval(&-lambda, &-x)?;
        let right = whitney_rank_poly(&m.contract(a), budget)?.eval(xi, y)?;
        rhs += num_traits::pow(lambda.clone(), r - ra) * num_traits::pow(-y, a.len() - ra) * left * right;
    }
    Ok(Sides { lhs, rhs })
}

pub fn kung_identity_check<M: Matroid>(
    m: &M,
    lambda: &BigRational,
    xi: &BigRational,
    x: &BigRational,
    y: &BigRational,
    budget: Budget,
) -> Result<bool> {
    Ok(kung_identity(m, lambda, xi, x, y, budget)?.holds())
}

/// The two specializations with `λξ = −1`, `xy = −q`, compared with the
/// restriction and contraction sums scaled by `(−1)^{|E|−r(E)}`.
/// Returns `(restriction, contraction)`; in each, `lhs` is the specialized
/// right-hand side and `rhs` the signed subset sum.
pub fn kung_specializations<M: Matroid>(m: &M, q: i64, budget: Budget) -> Result<(Sides, Sides)> {
    let qr = check_q(q)?;
    let s = sign(m.len() - m.full_rank());
    let one = BigRational::one();
    let restr = kung_identity(m, &qr, &-qr.recip(), &one, &-qr.clone(), budget)?;
    let contr = kung_identity(m, &qr.recip(), &-qr.clone(), &qr, &-one, budget)?;
    Ok((
        Sides {
            lhs: restr.rhs,
            rhs: &s * theorem2_restriction_rhs(m, q, budget)?,
        },
        Sides {
            lhs: contr.rhs,
            rhs: s * theorem2_contraction_rhs(m, q, budget)?,
        },
    ))
}

/// The graph forms of the ζ and contraction identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphIdentities {
    /// `F_G ζ(−1)^{|E|} = Σ_H (−1)^{|E|−|E(H)|} P_H/q^{|V|} ζ(1)^{|E(H)|}`.
    pub flow_from_colorings: Sides,
    /// `P_G/q^{|V|} ζ(1)^{|E|} = Σ_H ζ(−1)^{|E(H)|} F_H`.
    pub colorings_from_flows: Sides,
    /// `F_G q^{|V|} = Σ_H (−1)^{|E|−|E(H)|} (q−1)^{|E(H)|} P_{G/H}`.
    pub flow_from_contractions: Sides,
}

impl GraphIdentities {
    pub fn holds(&self) -> bool {
        self.flow_from_colorings.holds() && self.colorings_from_flows.holds() && self.flow_from_contractions.holds()
    }
}

/// Evaluates the three graph identities at `q`, with `H` ranging over
/// spanning subgraphs.
pub fn graph_identity_checks(g: &Multigraph, q: i64, budget: Budget) -> Result<GraphIdentities> {
    let qr = check_q(q)?;
    budget.check(state_count(2, g.edge_count()))?;
    let (zp, zm) = (zeta_plus(&qr), zeta_minus(&qr));
    let e = g.edge_count();
    let qv = num_traits::pow(qr.clone(), g.vertex_count());
    let mut rhs9 = BigRational::zero();
    let mut rhs10 = BigRational::zero();
    let mut rhs11 = BigRational::zero();
    for a in g.edge_set().subsets() {
        let h = g.spanning_subgraph(a);
        let p_h = h.chromatic_poly(budget)?.eval(&qr);
        rhs9 += sign(e - a.len()) * p_h / &qv * num_traits::pow(zp.clone(), a.len());
        rhs10 += num_traits::pow(zm.clone(), a.len()) * h.flow_poly(budget)?.eval(&qr);
        let p_c = g.contract_edges(a).chromatic_poly(budget)?.eval(&qr);
        rhs11 += sign(e - a.len()) * num_traits::pow(&qr - BigRational::one(), a.len()) * p_c;
    }
    let f_g = g.flow_poly(budget)?.eval(&qr);
    let p_g = g.chromatic_poly(budget)?.eval(&qr);
    Ok(GraphIdentities {
        flow_from_colorings: Sides {
            lhs: &f_g * num_traits::pow(zm, e),
            rhs: rhs9,
        },
        colorings_from_flows: Sides {
            lhs: p_g / &qv * num_traits::pow(zp, e),
            rhs: rhs10,
        },
        flow_from_contractions: Sides {
            lhs: f_g * qv,
            rhs: rhs11,
        },
    })
}

/// The contraction identity as polynomials, grouped by `|E(H)|`:
/// entry `k` is `Σ_{|E(H)|=k} (−1)^{|E|−k} (x−1)^k P_{G/H}(x)`.
pub fn contraction_expansion(g: &Multigraph, budget: Budget) -> Result<Vec<UniPoly>> {
    budget.check(state_count(2, g.edge_count()))?;
    let e = g.edge_count();
    let mut out = vec![UniPoly::zero(); e + 1];
    let xm1 = UniPoly::from_ints(&[-1, 1]);
    for a in g.edge_set().subsets() {
        let k = a.len();
        let p = g.contract_edges(a).chromatic_poly(budget)?;
        let s = if (e - k).is_multiple_of(2) { 1 } else { -1 };
        let term = (&xm1.pow(k as u32) * &p).scale(&BigInt::from(s));
        out[k] = &out[k] + &term;
    }
    Ok(out)
}

/// One evaluation point of an [`IdentityReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointValue {
    pub q: i64,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

/// An identity evaluated at several points. The verdict is pass only if
/// every point agrees and there are more points than `degree_bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub matroid: String,
    pub degree_bound: usize,
    pub points: Vec<PointValue>,
    pub pass: bool,
}

impl IdentityReport {
    pub fn build<F>(identity: &str, matroid: &str, degree_bound: usize, qs: &[i64], mut eval: F) -> Result<IdentityReport>
    where
        F: FnMut(i64) -> Result<Sides>,
    {
        let mut points = Vec::with_capacity(qs.len());
        for &q in qs {
            let s = eval(q)?;
            points.push(PointValue {
                q,
                pass: s.holds(),
                lhs: s.lhs.to_string(),
                rhs: s.rhs.to_string(),
            });
        }
        let pass = points.len() > degree_bound && points.iter().all(|p| p.pass);
        Ok(IdentityReport {
            identity: identity.to_string(),
            matroid: matroid.to_string(),
            degree_bound,
            points,
            pass,
        })
    }
}

/// Degree bound for the restriction and contraction identities after
/// clearing denominators: `|E| + r(E)`.
pub fn theorem2_degree_bound<M: Matroid + ?Sized>(m: &M) -> usize {
    m.len() + m.full_rank()
}

/// Reports for the restriction and contraction sums against `χ_{M^⊥}` at every `q`.
pub fn theorem2_reports<M: Matroid>(m: &M, name: &str, qs: &[i64], budget: Budget) -> Result<Vec<IdentityReport>> {
    let bound = theorem2_degree_bound(m);
    let restriction = IdentityReport::build("theorem2-restriction", name, bound, qs, |q| {
        Ok(Sides {
            lhs: dual_chi(m, q, budget)?,
            rhs: theorem2_restriction_rhs(m, q, budget)?,
        })
    })?;
    let contraction = IdentityReport::build("theorem2-contraction", name, bound, qs, |q| {
        Ok(Sides {
            lhs: dual_chi(m, q, budget)?,
            rhs: theorem2_contraction_rhs(m, q, budget)?,
        })
    })?;
    Ok(vec![restriction, contraction])
}

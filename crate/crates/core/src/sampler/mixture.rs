//! Exact check of the decomposition of the i.i.d.-marked model into uniform
//! marked classes.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::counts::{CountVectors, ModelParams};
use crate::enumerate::{enumerate_graphs_with, type_class_size, visit_all_marked, Limits};
use crate::graph::{DegreeSequence, MarkedGraph};
use crate::rational::Rational;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixtureViolation {
    pub graph: MarkedGraph,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixtureReport {
    pub outcomes: usize,
    /// Total probability of all outcomes under the model (must be 1).
    pub total_mass: Rational,
    /// `P(G_n = G) = P(π(G_n) = π(G)) · P(L_m(χ²≤) = m_≤/m) · P(L_n(ϑ) = u/n)`.
    pub product_violations: usize,
    pub first_product_violation: Option<MixtureViolation>,
    /// The same right-hand side divided by `|Ḡ(ℓ)_{m_G,u_G}|`, i.e. `G_n`
    /// given its count vectors is uniform on the marked class.
    pub conditional_violations: usize,
    pub first_conditional_violation: Option<MixtureViolation>,
}

impl MixtureReport {
    pub fn product_holds(&self) -> bool {
        self.product_violations == 0
    }

    pub fn conditional_holds(&self) -> bool {
        self.conditional_violations == 0 && self.total_mass.is_one()
    }
}

fn pow(base: &Rational, e: u64) -> Rational {
    let mut out = Rational::one();
    for _ in 0..e {
        out *= base;
    }
    out
}

fn big(x: BigUint) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// `P(L_total(law) = counts / total)`: multinomial probability of the counts.
fn multinomial_probability(counts: &[u64], law: &[Rational]) -> Rational {
    let mut p = big(type_class_size(counts));
    for (c, q) in counts.iter().zip(law) {
        p *= pow(q, *c);
    }
    p
}

/// `χ²≤` in the order of [`CountVectors::m_leq`].
fn chi2_leq(chi: &[Rational]) -> Vec<Rational> {
    let k = chi.len();
    let two = Rational::from_integer(2.into());
    (0..k)
        .flat_map(|x| (x..k).map(move |y| (x, y)))
        .map(|(x, y)| if x == y { &chi[x] * &chi[x] } else { &two * &chi[x] * &chi[y] })
        .collect()
}

/// Enumerates every marked graph with degrees `ell` and compares the model
/// probability with both forms of the decomposition, in exact arithmetic.
pub fn mixture_identity_check(ell: &DegreeSequence, params: &ModelParams, limits: &Limits) -> Result<MixtureReport> {
    let theta = params.vartheta().len();
    let xi = params.chi().len();
    let graphs = big(enumerate_graphs_with(ell, limits)?.count);
    let unit_graph = Rational::one() / &graphs;
    let chi2 = chi2_leq(params.chi());
    let mut report = MixtureReport {
        outcomes: 0,
        total_mass: Rational::zero(),
        product_violations: 0,
        first_product_violation: None,
        conditional_violations: 0,
        first_conditional_violation: None,
    };
    visit_all_marked(ell, theta, xi, limits, |g| {
        let mut lhs = unit_graph.clone();
        for &t in g.vertex_marks() {
            lhs *= &params.vartheta()[t as usize];
        }
        for e in g.edges() {
            lhs *= &params.chi()[e.xi_uv as usize];
            lhs *= &params.chi()[e.xi_vu as usize];
        }
        let cv = CountVectors::from_graph(g, theta, xi);
        let leq: Vec<u64> = cv.m_leq().iter().map(|&(_, c)| c).collect();
        let edge_factor = multinomial_probability(&leq, &chi2);
        let vertex_factor = multinomial_probability(cv.u(), params.vartheta());
        let product = &unit_graph * &edge_factor * &vertex_factor;
        let class_size = &graphs
            * big(type_class_size(cv.u()))
            * big(type_class_size(&leq))
            * pow(&Rational::from_integer(2.into()), cv.off_diagonal_total());
        let conditional = &edge_factor * &vertex_factor / class_size;
        report.outcomes += 1;
        report.total_mass += &lhs;
        if product != lhs {
            report.product_violations += 1;
            if report.first_product_violation.is_none() {
                report.first_product_violation =
                    Some(MixtureViolation { graph: g.clone(), lhs: lhs.clone(), rhs: product });
            }
        }
        if conditional != lhs {
            report.conditional_violations += 1;
            if report.first_conditional_violation.is_none() {
                report.first_conditional_violation =
                    Some(MixtureViolation { graph: g.clone(), lhs, rhs: conditional });
            }
        }
    })?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn unmarked_instance_is_uniform() {
        let params = ModelParams::new(vec![ratio(1, 1)], vec![ratio(1, 1)]).unwrap();
        let r = mixture_identity_check(&seq(&[1, 1, 1, 1]), &params, &Limits::default()).unwrap();
        assert_eq!(r.outcomes, 3);
        assert!(r.product_holds());
        assert!(r.conditional_holds());
    }

    #[test]
    fn two_vertex_instance() {
        let half = ratio(1, 2);
        let params = ModelParams::new(vec![half.clone(), half.clone()], vec![half.clone(), half]).unwrap();
        let r = mixture_identity_check(&seq(&[1, 1]), &params, &Limits::default()).unwrap();
        assert_eq!(r.outcomes, 16);
        assert!(r.conditional_holds());
        // Equal edge marks, distinct vertex marks: 1/16 against 1/8.
        let v = r.first_product_violation.expect("the bare product overcounts");
        assert_eq!(v.lhs, ratio(1, 16));
        assert_eq!(v.rhs, ratio(1, 8));
        assert_eq!(r.product_violations, 12);
    }
}

//! The edge weight h, the ASO and Sombor indices, and the edge-deletion
//! delta decomposition.
//!
//! h(a, b) = (a² + b²)/(a + b − 2) is kept as an exact reduced fraction:
//! the degree-pair ordering contains a genuine equality,
//! h(n−1, n−3) = h(n−2, 1), that floating-point comparison would
//! misclassify. Floating point enters only after the square root.
//!
//! ASO is defined for graphs with no isolated edge (no P_2 component);
//! the abstract of the source material asks for more than two vertices,
//! but the definition itself only needs the P_2 exclusion, which is the
//! precondition enforced here.

use std::cmp::Ordering;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::{from_i64, KahanSum, Real};

/// Exact value of h(a, b) as a reduced integer fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalWeight {
    numerator: i64,
    denominator: i64,
}

impl RationalWeight {
    fn new(numerator: i64, denominator: i64) -> Self {
        debug_assert!(denominator > 0);
        let g = numerator.gcd(&denominator);
        RationalWeight {
            numerator: numerator / g,
            denominator: denominator / g,
        }
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    /// The fraction as a floating scalar.
    pub fn to_real<T: Real>(&self) -> T {
        from_i64::<T>(self.numerator) / from_i64::<T>(self.denominator)
    }
}

impl PartialOrd for RationalWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalWeight {
    /// Exact comparison by integer cross-multiplication.
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.numerator as i128 * other.denominator as i128;
        let rhs = other.numerator as i128 * self.denominator as i128;
        lhs.cmp(&rhs)
    }
}

impl std::fmt::Display for RationalWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// h(a, b) = (a² + b²)/(a + b − 2) as an exact fraction.
/// The pair (1, 1) — an isolated edge — is the pole of h and rejected.
pub fn h_exact(a: usize, b: usize) -> Result<RationalWeight> {
    if a < 1 || b < 1 || a + b < 3 {
        return Err(Error::IsolatedEdgePair(a, b));
    }
    let (a, b) = (a as i64, b as i64);
    Ok(RationalWeight::new(a * a + b * b, a + b - 2))
}

/// √h(a, b): the contribution of one edge with endpoint degrees (a, b).
pub fn edge_contribution<T: Real>(a: usize, b: usize) -> Result<T> {
    Ok(h_exact(a, b)?.to_real::<T>().sqrt())
}

/// Continuous extension f(x, y) = √((x² + y²)/(x + y − 2)) used by the
/// analytic lemma checks.
pub fn edge_fn<T: Real>(x: T, y: T) -> T {
    let two = from_i64::<T>(2);
    ((x * x + y * y) / (x + y - two)).sqrt()
}

/// Exact comparison of h over two degree pairs. No floating point.
pub fn compare_h_pairs(p: (usize, usize), q: (usize, usize)) -> Result<Ordering> {
    Ok(h_exact(p.0, p.1)?.cmp(&h_exact(q.0, q.1)?))
}

/// The augmented Sombor index Σ √h(dᵢ, dⱼ) over all edges.
///
/// Rejects graphs containing an isolated edge (P_2 component), naming
/// the offending edge; edgeless graphs score 0 (a vacuous sum).
pub fn aso<T: Real>(g: &Graph) -> Result<T> {
    if let Some((u, v)) = g.isolated_edge() {
        return Err(Error::IsolatedEdge(u, v));
    }
    let degrees = g.degrees();
    let mut sum = KahanSum::<T>::new();
    for (u, v) in g.edges() {
        sum.add(edge_contribution(degrees[u], degrees[v])?);
    }
    Ok(sum.total())
}

/// The Sombor index Σ √(dᵢ² + dⱼ²); total on all graphs.
pub fn so<T: Real>(g: &Graph) -> T {
    let degrees = g.degrees();
    let mut sum = KahanSum::<T>::new();
    for (u, v) in g.edges() {
        let (a, b) = (
            from_i64::<T>(degrees[u] as i64),
            from_i64::<T>(degrees[v] as i64),
        );
        sum.add((a * a + b * b).sqrt());
    }
    sum.total()
}

/// The three-term breakdown of ASO(G) − ASO(G − e) for an edge
/// e = vᵢvⱼ: the two neighborhood sums Θᵢ, Θⱼ and the deleted edge's
/// own weight f(dᵢ, dⱼ).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DeletionDelta<T: Real> {
    pub theta_i: T,
    pub theta_j: T,
    pub edge_term: T,
    pub total: T,
}

/// Computes the deletion delta for `e ∈ E(g)`.
///
/// Both `g` and `g − e` must be free of isolated edges (so every term
/// of the decomposition is inside the domain of h); the violated side
/// is named in the error. The sign of `total` is reported, not assumed.
pub fn aso_delta_decomposition<T: Real>(g: &Graph, e: (usize, usize)) -> Result<DeletionDelta<T>> {
    let (i, j) = e;
    if i >= g.order() || j >= g.order() || !g.has_edge(i, j) {
        return Err(Error::NotAnEdge(i, j));
    }
    if let Some((u, v)) = g.isolated_edge() {
        return Err(Error::IsolatedEdgeIn { graph: "G", u, v });
    }
    let deleted = g.delete_edge(e)?;
    if let Some((u, v)) = deleted.isolated_edge() {
        return Err(Error::IsolatedEdgeIn { graph: "G-e", u, v });
    }

    let degrees = g.degrees();
    let theta = |center: usize, other_end: usize| -> Result<T> {
        if degrees[center] == 1 {
            return Ok(T::zero());
        }
        let mut sum = KahanSum::<T>::new();
        let mut neighbors = g.neighbors(center) & !(1u64 << other_end);
        while neighbors != 0 {
            let r = neighbors.trailing_zeros() as usize;
            neighbors &= neighbors - 1;
            let before: T = edge_contribution(degrees[center], degrees[r])?;
            let after: T = edge_contribution(degrees[center] - 1, degrees[r])?;
            sum.add(before - after);
        }
        Ok(sum.total())
    };

    let theta_i = theta(i, j)?;
    let theta_j = theta(j, i)?;
    let edge_term = edge_contribution(degrees[i], degrees[j])?;
    Ok(DeletionDelta {
        theta_i,
        theta_j,
        edge_term,
        total: theta_i + theta_j + edge_term,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn h_of_2_2_is_4() {
        let h = h_exact(2, 2).unwrap();
        assert_eq!((h.numerator(), h.denominator()), (4, 1));
    }

    #[test]
    fn lemma_equality_pair_at_n_10() {
        let left = h_exact(9, 7).unwrap();
        let right = h_exact(8, 1).unwrap();
        assert_eq!((left.numerator(), left.denominator()), (65, 7));
        assert_eq!(left, right);
    }

    #[test]
    fn h_rejects_pole() {
        assert_eq!(h_exact(1, 1), Err(Error::IsolatedEdgePair(1, 1)));
        assert!(h_exact(0, 3).is_err());
    }

    #[test]
    fn edge_contribution_hand_values() {
        assert_eq!(edge_contribution::<f64>(2, 2).unwrap(), 2.0);
        assert!(close(edge_contribution(1, 2).unwrap(), 5f64.sqrt(), 1e-15));
        assert!(close(
            edge_contribution(3, 3).unwrap(),
            4.5f64.sqrt(),
            1e-15
        ));
    }

    #[test]
    fn aso_of_cycles_is_2n() {
        for n in 3..=12 {
            let value: f64 = aso(&families::cycle(n).unwrap()).unwrap();
            assert_eq!(value, 2.0 * n as f64);
        }
    }

    #[test]
    fn aso_of_k4() {
        let value: f64 = aso(&families::complete(4).unwrap()).unwrap();
        assert!(close(value, 6.0 * 4.5f64.sqrt(), 1e-15));
        assert!(close(value, 12.727922061357855, 1e-12));
    }

    #[test]
    fn aso_rejects_isolated_edge() {
        let p2 = families::path(2).unwrap();
        assert_eq!(aso::<f64>(&p2), Err(Error::IsolatedEdge(0, 1)));
    }

    #[test]
    fn aso_of_edgeless_is_zero() {
        assert_eq!(aso::<f64>(&Graph::build(5, &[]).unwrap()).unwrap(), 0.0);
    }

    #[test]
    fn so_hand_values() {
        assert!(close(
            so(&families::cycle(4).unwrap()),
            4.0 * 8f64.sqrt(),
            1e-15
        ));
        assert!(close(
            so(&families::path(3).unwrap()),
            2.0 * 5f64.sqrt(),
            1e-15
        ));
        assert_eq!(so::<f64>(&Graph::build(3, &[]).unwrap()), 0.0);
    }

    #[test]
    fn compare_h_pairs_examples() {
        assert_eq!(compare_h_pairs((9, 7), (8, 1)).unwrap(), Ordering::Equal);
        assert_eq!(compare_h_pairs((8, 8), (9, 7)).unwrap(), Ordering::Less);
        assert_eq!(compare_h_pairs((9, 1), (9, 9)).unwrap(), Ordering::Greater);
        assert!(compare_h_pairs((1, 1), (2, 2)).is_err());
    }

    #[test]
    fn delta_on_k3() {
        let k3 = families::complete(3).unwrap();
        let delta: DeletionDelta<f64> = aso_delta_decomposition(&k3, (0, 1)).unwrap();
        let expected_theta = 2.0 - 5f64.sqrt();
        assert!(close(delta.theta_i, expected_theta, 1e-14));
        assert!(close(delta.theta_j, expected_theta, 1e-14));
        assert_eq!(delta.edge_term, 2.0);
        assert!(close(delta.total, 1.5278640450004204, 1e-12));
        let independent =
            aso::<f64>(&k3).unwrap() - aso::<f64>(&k3.delete_edge((0, 1)).unwrap()).unwrap();
        assert!(close(delta.total, independent, 1e-12));
    }

    #[test]
    fn delta_on_end_edge_of_p5() {
        let p5 = families::path(5).unwrap();
        // Orient the edge so the pendant endpoint is j.
        let delta: DeletionDelta<f64> = aso_delta_decomposition(&p5, (1, 0)).unwrap();
        assert_eq!(delta.theta_j, 0.0, "pendant side contributes nothing");
        assert!(close(delta.total, 2.0, 1e-12));
        let independent =
            aso::<f64>(&p5).unwrap() - aso::<f64>(&p5.delete_edge((0, 1)).unwrap()).unwrap();
        assert!(close(independent, 2.0, 1e-12));
    }

    #[test]
    fn delta_rejects_isolated_edge_in_remainder() {
        let p5 = families::path(5).unwrap();
        let err = aso_delta_decomposition::<f64>(&p5, (1, 2)).unwrap_err();
        assert_eq!(
            err,
            Error::IsolatedEdgeIn {
                graph: "G-e",
                u: 0,
                v: 1
            }
        );
    }

    #[test]
    fn delta_rejects_non_edge() {
        let p5 = families::path(5).unwrap();
        assert_eq!(
            aso_delta_decomposition::<f64>(&p5, (0, 4)).unwrap_err(),
            Error::NotAnEdge(0, 4)
        );
    }

    #[test]
    fn works_at_f32() {
        let value: f32 = aso(&families::cycle(5).unwrap()).unwrap();
        assert_eq!(value, 10.0f32);
    }
}

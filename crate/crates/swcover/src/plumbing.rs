//! Negative definite plumbing graphs, their intersection forms,
//! characteristic-vector searches, and the cusp-surgery filling tables.

use crate::error::{Error, Result};
use crate::exactmath::rational::{rat, rat_int, Rational};
use crate::spherical::{AdeDiagram, Manifold3};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A plumbing graph: integer vertex weights and simple edges. The
/// intersection form has the weights on the diagonal and a 1 for each edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlumbingGraph {
    weights: Vec<i64>,
    edges: Vec<(usize, usize)>,
}

impl PlumbingGraph {
    pub fn new(weights: Vec<i64>, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(a, b) in &edges {
            if a >= weights.len() || b >= weights.len() {
                return Err(Error::Domain(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(Error::Domain("plumbing graphs have no loops".into()));
            }
        }
        Ok(PlumbingGraph { weights, edges })
    }

    /// A chain with the given weights, adjacent vertices joined by an edge.
    pub fn linear_chain(weights: &[i64]) -> Self {
        let edges = (1..weights.len()).map(|i| (i - 1, i)).collect();
        PlumbingGraph {
            weights: weights.to_vec(),
            edges,
        }
    }

    /// The ADE plumbing: the Dynkin diagram with every vertex weighted -2.
    pub fn ade(diagram: AdeDiagram) -> Result<Self> {
        let chain = |k: usize| PlumbingGraph::linear_chain(&vec![-2; k]);
        match diagram {
            AdeDiagram::A(k) => {
                if k < 1 {
                    return Err(Error::Domain("A_k needs k >= 1".into()));
                }
                Ok(chain(k as usize))
            }
            AdeDiagram::D(k) => {
                if k < 3 {
                    return Err(Error::Domain("D_k needs k >= 3".into()));
                }
                let k = k as usize;
                let mut edges = vec![(0, 2), (1, 2)];
                edges.extend((3..k).map(|i| (i - 1, i)));
                Ok(PlumbingGraph {
                    weights: vec![-2; k],
                    edges,
                })
            }
            AdeDiagram::E6 | AdeDiagram::E7 | AdeDiagram::E8 => {
                let k = match diagram {
                    AdeDiagram::E6 => 6,
                    AdeDiagram::E7 => 7,
                    _ => 8,
                };
                let mut g = chain(k - 1);
                g.weights.push(-2);
                g.edges.push((2, k - 1));
                Ok(g)
            }
        }
    }

    /// Disjoint union (the intersection form of a boundary connected sum).
    pub fn disjoint_union(&self, other: &PlumbingGraph) -> PlumbingGraph {
        let offset = self.weights.len();
        let mut weights = self.weights.clone();
        weights.extend_from_slice(&other.weights);
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
        PlumbingGraph { weights, edges }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn b2(&self) -> usize {
        self.weights.len()
    }

    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.weights.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, &w) in self.weights.iter().enumerate() {
            m[i][i] = w;
        }
        for &(a, b) in &self.edges {
            m[a][b] += 1;
            m[b][a] += 1;
        }
        m
    }

    /// Exact determinant of the intersection form.
    pub fn determinant(&self) -> BigInt {
        det_bigint(&self.intersection_matrix())
    }

    /// Sylvester criterion on leading principal minors, in exact integer
    /// arithmetic: negative definite iff `(-1)^k det(Q_k) > 0` for all k.
    pub fn is_negative_definite(&self) -> bool {
        let m = self.intersection_matrix();
        for k in 1..=m.len() {
            let sub: Vec<Vec<i64>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            let d = det_bigint(&sub);
            let signed = if k % 2 == 1 { -d } else { d };
            if signed <= BigInt::zero() {
                return false;
            }
        }
        true
    }

    /// Signature of the intersection form (for the negative definite graphs
    /// used here this is `-b2`, but it is computed honestly).
    pub fn signature(&self) -> i64 {
        let m = self.intersection_matrix();
        signature_symmetric(&m)
    }
}

fn det_bigint(m: &[Vec<i64>]) -> BigInt {
    // Bareiss fraction-free elimination.
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Signature of a symmetric integer matrix by exact congruence
/// diagonalization over the rationals.
fn signature_symmetric(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| rat_int(x)).collect())
        .collect();
    let mut sig = 0i64;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(l) = (k + 1..n).find(|&l| !a[l][l].is_zero()) {
                // Swap basis vectors k and l.
                a.swap(k, l);
                for row in a.iter_mut() {
                    row.swap(k, l);
                }
            } else if let Some(l) = (k + 1..n).find(|&l| !a[l][k].is_zero()) {
                // All remaining diagonal entries vanish; adding basis vector
                // l into k produces the pivot 2 a[l][k] != 0.
                for j in 0..n {
                    let v = a[l][j].clone();
                    a[k][j] += v;
                }
                for i in 0..n {
                    let v = a[i][l].clone();
                    a[i][k] += v;
                }
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_zero() {
            continue;
        }
        sig += if pivot.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone() / pivot.clone();
            // Row and column operations together keep the matrix symmetric.
            for j in 0..n {
                let v = a[k][j].clone() * factor.clone();
                a[i][j] -= v;
            }
            for j in 0..n {
                let v = a[j][k].clone() * factor.clone();
                a[j][i] -= v;
            }
        }
    }
    sig
}

/// A characteristic vector, stored by its pairings with the vertex classes.
/// Characteristic means congruent coordinatewise to the diagonal weights
/// mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharVector {
    pub coords: Vec<i64>,
}

impl CharVector {
    /// Validates the characteristic condition against `graph`.
    pub fn characteristic(graph: &PlumbingGraph, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != graph.b2() {
            return Err(Error::DimensionMismatch(graph.b2(), coords.len()));
        }
        for (i, (&c, &w)) in coords.iter().zip(graph.weights()).enumerate() {
            if (c - w) % 2 != 0 {
                return Err(Error::ParityViolation { c, n: graph.weights()[i] });
            }
        }
        Ok(CharVector { coords })
    }
}

/// `delta(X, s) = (c(s)^2 - sigma(X)) / 8`.
pub fn delta_4mfd(c_squared: &Rational, sigma: i64) -> Rational {
    (c_squared - rat_int(sigma)) / rat_int(8)
}

/// `c^2 = c^T Q^{-1} c` for the intersection form `Q` of the graph,
/// computed exactly; fails with `SingularForm` when `det Q = 0`.
pub fn char_square(graph: &PlumbingGraph, c: &CharVector) -> Result<Rational> {
    if c.coords.len() != graph.b2() {
        return Err(Error::DimensionMismatch(graph.b2(), c.coords.len()));
    }
    let n = graph.b2();
    if n == 0 {
        return Ok(Rational::zero());
    }
    // Solve Q x = c by Gaussian elimination over the rationals.
    let m = graph.intersection_matrix();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = m[i].iter().map(|&x| rat_int(x)).collect();
            row.push(rat_int(c.coords[i]));
            row
        })
        .collect();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Err(Error::SingularForm);
        };
        a.swap(col, pivot);
        let inv = rat_int(1) / a[col][col].clone();
        for j in col..=n {
            a[col][j] = a[col][j].clone() * inv.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..=n {
                    let v = a[col][j].clone() * f.clone();
                    a[r][j] -= v;
                }
            }
        }
    }
    let mut square = Rational::zero();
    for i in 0..n {
        square += rat_int(c.coords[i]) * a[i][n].clone();
    }
    Ok(square)
}

/// All characteristic vectors with coordinates bounded by `bound` in
/// absolute value whose `delta(W, s)` matches `target_delta` mod 1.
pub fn sharp_delta_search(
    graph: &PlumbingGraph,
    target_delta_mod1: &Rational,
    bound: u64,
) -> Result<Vec<CharVector>> {
    if !graph.is_negative_definite() {
        return Err(Error::Domain(
            "sharp_delta_search requires a negative definite graph".into(),
        ));
    }
    let sigma = -(graph.b2() as i64);
    let mut out = Vec::new();
    let mut coords = vec![0i64; graph.b2()];
    enumerate_characteristic(graph, 0, bound as i64, &mut coords, &mut |c| {
        let cv = CharVector { coords: c.to_vec() };
        let delta = delta_4mfd(&char_square(graph, &cv).unwrap(), sigma);
        if (delta - target_delta_mod1).is_integer() {
            out.push(cv);
        }
    });
    Ok(out)
}

fn enumerate_characteristic(
    graph: &PlumbingGraph,
    index: usize,
    bound: i64,
    coords: &mut Vec<i64>,
    visit: &mut impl FnMut(&[i64]),
) {
    if index == graph.b2() {
        visit(coords);
        return;
    }
    let w = graph.weights()[index];
    // Smallest value >= -bound with the parity of the weight.
    let mut c = if (-bound - w) % 2 == 0 { -bound } else { -bound + 1 };
    while c <= bound {
        coords[index] = c;
        enumerate_characteristic(graph, index + 1, bound, coords, visit);
        c += 2;
    }
}

/// The filling 4-manifold `W_p` used for a left-handed cusp of
/// self-intersection `-p`, together with a label for its boundary
/// `S_(-p)(-T_(2,3))`.
#[derive(Clone, Debug)]
pub struct CuspBoundaryData {
    pub p: u64,
    /// Documentation label for the boundary 3-manifold.
    pub boundary: String,
    /// Catalog form of the boundary where the catalog covers it.
    pub boundary_manifold: Option<Manifold3>,
    pub filling: PlumbingGraph,
}

/// The filling table for `1 <= p <= 7`: the E-type plumbing with `9 - p`
/// vertices for `p <= 5` (so `p = 1` gives E8; `E5 = D5`, `E4 = A4`), the
/// boundary connected sum of the A1 and A2 plumbings for `p = 6`, and the
/// two-vertex graph with weights -8, -2 for `p = 7`.
pub fn cusp_boundary_data(p: u64) -> Result<CuspBoundaryData> {
    if !(1..=7).contains(&p) {
        return Err(Error::OutOfRange(p as i64, 1, 7));
    }
    let (boundary, boundary_manifold, filling) = match p {
        1 => (
            "M(-1; (2,-1), (3,-1), (5,-1))".to_string(),
            None,
            PlumbingGraph::ade(AdeDiagram::E8)?,
        ),
        2 => (
            "M(-1; (2,-1), (3,-1), (4,-1))".to_string(),
            None,
            PlumbingGraph::ade(AdeDiagram::E7)?,
        ),
        3 => (
            "M(-1; (2,-1), (3,-1), (3,-1))".to_string(),
            None,
            PlumbingGraph::ade(AdeDiagram::E6)?,
        ),
        4 => (
            "M(-1; (2,-1), (3,-1), (2,-1)) = Y(3)".to_string(),
            Some(Manifold3::prism(3)),
            PlumbingGraph::ade(AdeDiagram::D(5))?,
        ),
        5 => (
            "M(-1; (2,-1), (3,-1), (1,-1)) = L(5,4)".to_string(),
            Some(Manifold3::lens(5, 4)?),
            PlumbingGraph::ade(AdeDiagram::A(4))?,
        ),
        6 => (
            "L(2,1) # L(3,2)".to_string(),
            Some(Manifold3::connected_sum_of_lens(vec![(2, 1), (3, 2)])?),
            PlumbingGraph::ade(AdeDiagram::A(1))?
                .disjoint_union(&PlumbingGraph::ade(AdeDiagram::A(2))?),
        ),
        _ => (
            "L(7,2)".to_string(),
            Some(Manifold3::lens(7, 2)?),
            PlumbingGraph::new(vec![-8, -2], vec![(0, 1)])?,
        ),
    };
    Ok(CuspBoundaryData {
        p,
        boundary,
        boundary_manifold,
        filling,
    })
}

/// Solutions `c''` of the cusp matching condition: `|c''| <= p`,
/// `c'' = p (mod 2)` and `-c''^2/(8p) + 1/8 = (9 - p)/8 (mod 1)`.
/// These are the pairings of spin-c extensions over the surgery trace
/// whose boundary delta can match the filling's.
pub fn cusp_matching_solutions(p: u64) -> Result<Vec<i64>> {
    if !(1..=7).contains(&p) {
        return Err(Error::OutOfRange(p as i64, 1, 7));
    }
    let disc = PlumbingGraph::linear_chain(&[-(p as i64)]);
    let target = rat(9 - p as i64, 8);
    let sols = sharp_delta_search(&disc, &target, p)?;
    Ok(sols.into_iter().map(|c| c.coords[0]).collect())
}

/// True iff every solution of the matching condition has `|c''| = p`, i.e.
/// the only spin-c structures on the surgery trace whose boundary delta
/// matches the filling's are the borderline ones. Holding for all
/// `1 <= p <= 7` is what makes the non-sharpness argument work.
pub fn cusp_sharpness_obstruction(p: u64) -> Result<bool> {
    let sols = cusp_matching_solutions(p)?;
    Ok(!sols.is_empty() && sols.iter().all(|&c| c.unsigned_abs() == p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ade_determinants() {
        for k in 1..=8u64 {
            let g = PlumbingGraph::ade(AdeDiagram::A(k)).unwrap();
            assert_eq!(
                g.determinant().abs(),
                BigInt::from(k + 1),
                "det A_{k}"
            );
        }
        for k in 3..=8u64 {
            let g = PlumbingGraph::ade(AdeDiagram::D(k)).unwrap();
            assert_eq!(g.determinant().abs(), BigInt::from(4u64), "det D_{k}");
        }
        for (d, expect) in [
            (AdeDiagram::E6, 3u64),
            (AdeDiagram::E7, 2),
            (AdeDiagram::E8, 1),
        ] {
            let g = PlumbingGraph::ade(d).unwrap();
            assert_eq!(g.determinant().abs(), BigInt::from(expect), "{d:?}");
        }
    }

    #[test]
    fn ade_and_cusp_graphs_negative_definite() {
        for d in [
            AdeDiagram::A(5),
            AdeDiagram::D(6),
            AdeDiagram::E6,
            AdeDiagram::E7,
            AdeDiagram::E8,
        ] {
            let g = PlumbingGraph::ade(d).unwrap();
            assert!(g.is_negative_definite(), "{d:?}");
            assert_eq!(g.signature(), -(g.b2() as i64));
        }
        for p in 1..=7u64 {
            let w = cusp_boundary_data(p).unwrap().filling;
            assert!(w.is_negative_definite(), "W_{p}");
            assert_eq!(w.b2() as i64, 9 - p as i64, "b2(W_{p})");
            assert_eq!(w.signature(), p as i64 - 9);
        }
    }

    #[test]
    fn not_negative_definite_examples() {
        let zero = PlumbingGraph::linear_chain(&[0]);
        assert!(!zero.is_negative_definite());
        // A (-1)-chain of two vertices with an edge has determinant 0.
        let g = PlumbingGraph::new(vec![-1, -1], vec![(0, 1)]).unwrap();
        assert_eq!(g.determinant(), BigInt::zero());
        assert!(!g.is_negative_definite());
        let pos = PlumbingGraph::linear_chain(&[2, -2]);
        assert!(!pos.is_negative_definite());
        assert_eq!(pos.signature(), 0);
    }

    #[test]
    fn hyperbolic_signature_zero() {
        // Two zero-weight vertices joined by an edge: the hyperbolic form,
        // exercising the zero-diagonal pivot path.
        let g = PlumbingGraph::new(vec![0, 0], vec![(0, 1)]).unwrap();
        assert_eq!(g.signature(), 0);
        assert_eq!(g.determinant(), BigInt::from(-1));
        assert!(!g.is_negative_definite());
    }

    #[test]
    fn char_square_examples() {
        let a1 = PlumbingGraph::ade(AdeDiagram::A(1)).unwrap();
        let zero = CharVector::characteristic(&a1, vec![0]).unwrap();
        assert_eq!(char_square(&a1, &zero).unwrap(), Rational::zero());
        let two = CharVector::characteristic(&a1, vec![2]).unwrap();
        assert_eq!(char_square(&a1, &two).unwrap(), rat_int(-2));
        let x4 = PlumbingGraph::linear_chain(&[-4]);
        let c = CharVector::characteristic(&x4, vec![4]).unwrap();
        assert_eq!(char_square(&x4, &c).unwrap(), rat_int(-4));
    }

    #[test]
    fn char_vector_parity_enforced() {
        let a1 = PlumbingGraph::ade(AdeDiagram::A(1)).unwrap();
        assert!(CharVector::characteristic(&a1, vec![1]).is_err());
    }

    #[test]
    fn char_square_singular_form() {
        let g = PlumbingGraph::new(vec![-1, -1], vec![(0, 1)]).unwrap();
        let c = CharVector { coords: vec![-1, -1] };
        assert_eq!(char_square(&g, &c), Err(Error::SingularForm));
    }

    #[test]
    fn char_square_symmetric_under_graph_automorphism() {
        // Reversal of the A_4 chain.
        let a4 = PlumbingGraph::ade(AdeDiagram::A(4)).unwrap();
        let c = CharVector::characteristic(&a4, vec![0, 2, -2, 4]).unwrap();
        let mut rev = c.coords.clone();
        rev.reverse();
        let c_rev = CharVector::characteristic(&a4, rev).unwrap();
        assert_eq!(
            char_square(&a4, &c).unwrap(),
            char_square(&a4, &c_rev).unwrap()
        );
        // Swap of the two fork tips of D_5.
        let d5 = PlumbingGraph::ade(AdeDiagram::D(5)).unwrap();
        let c = CharVector::characteristic(&d5, vec![2, 0, -2, 0, 2]).unwrap();
        let swapped = CharVector::characteristic(&d5, vec![0, 2, -2, 0, 2]).unwrap();
        assert_eq!(
            char_square(&d5, &c).unwrap(),
            char_square(&d5, &swapped).unwrap()
        );
    }

    #[test]
    fn dn_plus_2_zero_vector_delta() {
        for n in 1..=10i64 {
            let g = PlumbingGraph::ade(AdeDiagram::D((n + 2) as u64)).unwrap();
            let zero = CharVector::characteristic(&g, vec![0; g.b2()]).unwrap();
            let sq = char_square(&g, &zero).unwrap();
            assert_eq!(g.signature(), -(n + 2));
            assert_eq!(delta_4mfd(&sq, g.signature()), rat(n + 2, 8));
        }
    }

    #[test]
    fn delta_4mfd_examples() {
        assert_eq!(delta_4mfd(&Rational::zero(), -8), rat_int(1));
        assert_eq!(delta_4mfd(&rat_int(-4), -1), rat(-3, 8));
        assert_eq!(delta_4mfd(&Rational::zero(), 0), Rational::zero());
    }

    #[test]
    fn sharp_delta_search_examples() {
        let e8 = PlumbingGraph::ade(AdeDiagram::E8).unwrap();
        let found = sharp_delta_search(&e8, &rat_int(1), 0).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].coords, vec![0; 8]);

        let a1 = PlumbingGraph::ade(AdeDiagram::A(1)).unwrap();
        let found = sharp_delta_search(&a1, &rat(-1, 8), 2).unwrap();
        assert!(!found.is_empty());
    }

    #[test]
    fn cusp_obstruction_all_p() {
        for p in 1..=7u64 {
            let sols = cusp_matching_solutions(p).unwrap();
            let mut sorted = sols.clone();
            sorted.sort();
            assert_eq!(sorted, vec![-(p as i64), p as i64], "solutions for p={p}");
            assert!(cusp_sharpness_obstruction(p).unwrap());
        }
        assert!(cusp_boundary_data(0).is_err());
        assert!(cusp_boundary_data(8).is_err());
    }
}

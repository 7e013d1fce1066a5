//! Root generation from a Cartan matrix.
//!
//! The matrix is symmetrized, realized as exact rational vectors under the
//! standard dot product, and closed under the simple reflections. Short roots
//! of each irreducible component are normalized to squared length 2, which
//! makes the `A`/`C`/`D` realizations isometric to the classical closed
//! forms. Diagonal entries of the symmetrized Gram matrix are written as sums
//! of at most four rational squares, so every finite type embeds rationally.

use std::collections::{HashMap, VecDeque};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weights::{rat, Rational, WeightVector};

/// Hard bound on generated roots; E8 has 240.
const ROOT_GENERATION_BOUND: usize = 1000;

pub(crate) fn generate(matrix: &[Vec<i64>]) -> Result<RootSystem> {
    validate_shape(matrix)?;
    let n = matrix.len();
    let d = symmetrizer(matrix)?;
    // gram[i][j] = d_i * a[i][j] = <alpha_i, alpha_j>
    let gram: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| &d[i] * rat(matrix[i][j])).collect())
        .collect();
    let simple = realize(&gram)?;
    close_roots(matrix, simple)
}

fn validate_shape(matrix: &[Vec<i64>]) -> Result<()> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::InvalidCartan("empty matrix".into()));
    }
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        if row[i] != 2 {
            return Err(Error::InvalidCartan(format!("diagonal entry a[{i}][{i}] != 2")));
        }
        for (j, &a) in row.iter().enumerate() {
            if i != j {
                if a > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "positive off-diagonal entry a[{i}][{j}]"
                    )));
                }
                if (a == 0) != (matrix[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "zero pattern is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Positive rationals `d_i` with `d_i a[i][j] = d_j a[j][i]`, scaled per
/// connected component so the minimal `<alpha,alpha> = 2 d_i` equals 2.
fn symmetrizer(matrix: &[Vec<i64>]) -> Result<Vec<Rational>> {
    let n = matrix.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        // new component
        let mut component = vec![start];
        d[start] = Some(rat(1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i == j || matrix[i][j] == 0 {
                    continue;
                }
                let dj = d[i].as_ref().unwrap() * rat(matrix[i][j]) / rat(matrix[j][i]);
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        queue.push_back(j);
                    }
                    Some(existing) => {
                        if *existing != dj {
                            return Err(Error::InvalidCartan(
                                "matrix is not symmetrizable".into(),
                            ));
                        }
                    }
                }
            }
        }
        let min = component
            .iter()
            .map(|&i| d[i].clone().unwrap())
            .min()
            .unwrap();
        for &i in &component {
            let v = d[i].clone().unwrap() / &min;
            d[i] = Some(v);
        }
    }
    Ok(d.into_iter().map(Option::unwrap).collect())
}

/// Rational vectors with the prescribed Gram matrix, via `G = L D L^T` and a
/// sum-of-squares split of each pivot. Fails when `G` is not positive
/// definite, which rejects affine and indefinite types.
fn realize(gram: &[Vec<Rational>]) -> Result<Vec<WeightVector>> {
    let n = gram.len();
    let mut l = vec![vec![Rational::zero(); n]; n];
    let mut pivots = vec![Rational::zero(); n];
    for j in 0..n {
        let mut acc = gram[j][j].clone();
        for k in 0..j {
            acc -= &l[j][k] * &l[j][k] * &pivots[k];
        }
        if !acc.is_positive() {
            return Err(Error::InvalidCartan(
                "matrix is not of finite type (Gram form not positive definite)".into(),
            ));
        }
        pivots[j] = acc;
        l[j][j] = rat(1);
        for i in j + 1..n {
            let mut acc = gram[i][j].clone();
            for k in 0..j {
                acc -= &l[i][k] * &l[j][k] * &pivots[k];
            }
            l[i][j] = acc / &pivots[j];
        }
    }
    let blocks: Vec<Vec<Rational>> = pivots.iter().map(sum_of_squares).collect();
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0usize, |off, b| {
            let here = *off;
            *off += b.len();
            Some(here)
        })
        .collect();
    let ambient: usize = blocks.iter().map(Vec::len).sum();
    let simple = (0..n)
        .map(|i| {
            let mut coords = vec![Rational::zero(); ambient];
            for k in 0..=i {
                for (t, c) in blocks[k].iter().enumerate() {
                    coords[offsets[k] + t] = &l[i][k] * c;
                }
            }
            WeightVector::new(coords)
        })
        .collect();
    Ok(simple)
}

/// Writes a positive rational as a sum of at most four rational squares.
fn sum_of_squares(r: &Rational) -> Vec<Rational> {
    use num_traits::ToPrimitive;
    let p = r.numer().to_u64().expect("pivot numerator fits u64");
    let q = r.denom().to_u64().expect("pivot denominator fits u64");
    // p/q = (p*q)/q^2
    let target = p * q;
    let parts = four_squares(target);
    parts
        .into_iter()
        .map(|a| Rational::new(a.into(), q.into()))
        .collect()
}

/// Lagrange decomposition of a positive integer, preferring few terms.
fn four_squares(n: u64) -> Vec<u64> {
    let isqrt = |m: u64| -> u64 {
        let mut a = (m as f64).sqrt() as u64;
        while (a + 1) * (a + 1) <= m {
            a += 1;
        }
        while a * a > m {
            a -= 1;
        }
        a
    };
    let top = isqrt(n);
    for a in (1..=top).rev() {
        if a * a == n {
            return vec![a];
        }
    }
    for a in (1..=top).rev() {
        let rest = n - a * a;
        let b = isqrt(rest);
        if b >= 1 && b * b == rest && b <= a {
            return vec![a, b];
        }
    }
    for a in (1..=top).rev() {
        for b in (1..=isqrt(n - a * a)).rev() {
            if b > a {
                continue;
            }
            let rest = n - a * a - b * b;
            if rest == 0 {
                continue;
            }
            let c = isqrt(rest);
            if c >= 1 && c * c == rest && c <= b {
                return vec![a, b, c];
            }
        }
    }
    for a in (1..=top).rev() {
        for b in (1..=isqrt(n - a * a)).rev() {
            if b > a {
                continue;
            }
            for c in (1..=isqrt(n - a * a - b * b)).rev() {
                if c > b {
                    continue;
                }
                let rest = n - a * a - b * b - c * c;
                let e = isqrt(rest);
                if e >= 1 && e * e == rest && e <= c {
                    return vec![a, b, c, e];
                }
            }
        }
    }
    unreachable!("four-square decomposition exists for every positive integer");
}

/// Closes the realized simple roots under simple reflections, tracking
/// integer coordinates on the simple basis to split positives from
/// negatives.
fn close_roots(matrix: &[Vec<i64>], simple: Vec<WeightVector>) -> Result<RootSystem> {
    let n = matrix.len();
    let ambient = simple[0].dim();
    let mut coeffs: HashMap<WeightVector, Vec<i64>> = HashMap::new();
    let mut queue: VecDeque<WeightVector> = VecDeque::new();
    for (i, alpha) in simple.iter().enumerate() {
        let mut c = vec![0i64; n];
        c[i] = 1;
        coeffs.insert(alpha.clone(), c);
        queue.push_back(alpha.clone());
    }
    while let Some(beta) = queue.pop_front() {
        let c_beta = coeffs[&beta].clone();
        for i in 0..n {
            // pairing 2<beta,alpha_i>/<alpha_i,alpha_i> = sum_j c_j a[i][j]
            let pairing: i64 = (0..n).map(|j| matrix[i][j] * c_beta[j]).sum();
            let reflected = &beta - &simple[i].scale(&rat(pairing));
            if coeffs.contains_key(&reflected) {
                continue;
            }
            if coeffs.len() >= ROOT_GENERATION_BOUND {
                return Err(Error::GenerationBound(ROOT_GENERATION_BOUND));
            }
            let mut c = c_beta.clone();
            c[i] -= pairing;
            coeffs.insert(reflected.clone(), c);
            queue.push_back(reflected);
        }
    }
    let mut positive: Vec<(Vec<i64>, WeightVector)> = coeffs
        .into_iter()
        .filter_map(|(root, c)| {
            if c.iter().all(|&x| x >= 0) {
                Some((c, root))
            } else {
                None
            }
        })
        .collect();
    positive.sort_by(|a, b| {
        let ha: i64 = a.0.iter().sum();
        let hb: i64 = b.0.iter().sum();
        (ha, &a.0).cmp(&(hb, &b.0))
    });
    let positive: Vec<WeightVector> = positive.into_iter().map(|(_, r)| r).collect();
    RootSystem::from_parts(ambient, positive, simple)
}

//! Coding-theory Krawtchouk transform.
//!
//! `K_i(j; N, s)` is the `v^i` coefficient of `(1 + (s-1)v)^(N-j) (1-v)^j`.
//! With `p = 1/s` it is a rescaling of the Kravchuk matrix:
//! `K_i(j; N, s) = (2p)^-i Φ_{ij}`. Note that `s ≥ 2` means `p ≤ q`, the
//! opposite regime from the positivity theorem.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::math::scalar::{int, powi, ratio};
use crate::math::{DenseMatrix, ExactScalar, TruncatedSeries};
use crate::univariate::kravchuk_matrix;

/// Largest number of generator combinations `s^k` enumerated.
pub const ENUMERATION_BUDGET: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodingKrawtchouk {
    level: usize,
    s: u64,
    matrix: DenseMatrix,
}

pub fn coding_matrix(level: usize, s: u64) -> Result<CodingKrawtchouk> {
    if s < 2 {
        return Err(Error::domain(format!("alphabet size {s} must be at least 2")));
    }
    let n1 = level + 1;
    let mut matrix = DenseMatrix::zeros(n1, n1);
    for j in 0..n1 {
        let g = TruncatedSeries::linear(level, int(1), int(s as i64 - 1))
            .pow(level - j)
            .mul(&TruncatedSeries::linear(level, int(1), int(-1)).pow(j));
        for i in 0..n1 {
            matrix.set(i, j, g.coefficient(i));
        }
    }
    Ok(CodingKrawtchouk { level, s, matrix })
}

impl CodingKrawtchouk {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn alphabet_size(&self) -> u64 {
        self.s
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    /// `v̂_i = Σ_j K_i(j; N, s) v_j`.
    pub fn transform(&self, v: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        self.matrix.mul_vec(v)
    }

    /// `(2p)^-i Φ_{ij} - K_i(j; N, s)` with `p = 1/s`; zero when the two
    /// normalizations agree.
    pub fn scaling_defect(&self) -> DenseMatrix {
        let p = ratio(1, self.s as i64);
        let phi = kravchuk_matrix(self.level, &p).expect("1/s is a valid probability for s >= 2");
        let two_p = int(2) * &p;
        let mut out = phi.phi().clone();
        for i in 0..=self.level {
            let factor = powi(&two_p, -(i as i64)).expect("2p != 0");
            for j in 0..=self.level {
                let v = out.get(i, j) * &factor - self.matrix.get(i, j);
                out.set(i, j, v);
            }
        }
        out
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn inv_mod(a: u64, s: u64) -> u64 {
    // s prime, a != 0
    let mut result = 1u64;
    let mut base = a % s;
    let mut e = s - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % s;
        }
        base = base * base % s;
        e >>= 1;
    }
    result
}

/// Span of the generator rows over `Z/sZ`.
#[derive(Debug)]
pub struct LinearCode {
    s: u64,
    length: usize,
    generator: Vec<Vec<u64>>,
    codewords: OnceLock<Vec<Vec<u64>>>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        Self {
            s: self.s,
            length: self.length,
            generator: self.generator.clone(),
            codewords: self.codewords.clone(),
        }
    }
}

impl LinearCode {
    /// Entries are reduced mod `s`. An empty generator gives the zero code.
    pub fn new(s: u64, length: usize, generator: Vec<Vec<i64>>) -> Result<Self> {
        if s < 2 {
            return Err(Error::domain(format!("field order {s} must be at least 2")));
        }
        let generator = generator
            .into_iter()
            .enumerate()
            .map(|(r, row)| {
                if row.len() != length {
                    return Err(Error::dimension(
                        "LinearCode::new",
                        format!("{length} columns"),
                        format!("{} in generator row {r}", row.len()),
                    ));
                }
                Ok(row.into_iter().map(|x| x.rem_euclid(s as i64) as u64).collect())
            })
            .collect::<Result<Vec<Vec<u64>>>>()?;
        Ok(Self {
            s,
            length,
            generator,
            codewords: OnceLock::new(),
        })
    }

    pub fn field_order(&self) -> u64 {
        self.s
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn generator(&self) -> &[Vec<u64>] {
        &self.generator
    }

    fn require_prime(&self) -> Result<()> {
        if !is_prime(self.s) {
            return Err(Error::domain(format!("field order {} is not prime", self.s)));
        }
        Ok(())
    }

    /// All distinct codewords, enumerated from every combination of
    /// generator rows. Cached after the first call.
    pub fn codewords(&self) -> Result<&[Vec<u64>]> {
        if let Some(words) = self.codewords.get() {
            return Ok(words);
        }
        let k = self.generator.len() as u32;
        let combos = self
            .s
            .checked_pow(k)
            .filter(|&c| c <= ENUMERATION_BUDGET)
            .ok_or_else(|| {
                Error::Resource(format!(
                    "{}^{} generator combinations exceed the budget of {ENUMERATION_BUDGET}",
                    self.s, k
                ))
            })?;
        let mut words = BTreeSet::new();
        let mut digits = vec![0u64; k as usize];
        for _ in 0..combos {
            let mut word = vec![0u64; self.length];
            for (d, row) in digits.iter().zip(&self.generator) {
                if *d == 0 {
                    continue;
                }
                for (w, g) in word.iter_mut().zip(row) {
                    *w = (*w + d * g) % self.s;
                }
            }
            words.insert(word);
            // odometer increment
            for d in digits.iter_mut() {
                *d += 1;
                if *d < self.s {
                    break;
                }
                *d = 0;
            }
        }
        Ok(self.codewords.get_or_init(|| words.into_iter().collect()))
    }

    pub fn size(&self) -> Result<usize> {
        Ok(self.codewords()?.len())
    }

    /// Reduced row echelon form over `F_s`; returns the nonzero rows and
    /// their pivot columns.
    fn rref(&self) -> Result<(Vec<Vec<u64>>, Vec<usize>)> {
        self.require_prime()?;
        let s = self.s;
        let mut rows = self.generator.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.length {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = inv_mod(rows[r][c], s);
            for x in rows[r].iter_mut() {
                *x = *x * inv % s;
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    let pivot_row = rows[r].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                        *x = (*x + (s - f) * y) % s;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        Ok((rows, pivots))
    }

    /// Dimension over `F_s`.
    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// Dual code `{x : x·c = 0 for all c}` via the null space over `F_s`.
    pub fn dual(&self) -> Result<LinearCode> {
        let (rows, pivots) = self.rref()?;
        let s = self.s;
        let free: Vec<usize> = (0..self.length).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut x = vec![0i64; self.length];
                x[f] = 1;
                for (row, &pc) in rows.iter().zip(&pivots) {
                    x[pc] = ((s - row[f]) % s) as i64;
                }
                x
            })
            .collect();
        LinearCode::new(s, self.length, basis)
    }

    /// Number of codewords of each Hamming weight `0..=N`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        let mut dist = vec![0u64; self.length + 1];
        for w in self.codewords()? {
            dist[w.iter().filter(|&&x| x != 0).count()] += 1;
        }
        Ok(dist)
    }
}

fn to_scalars(v: &[u64]) -> Vec<ExactScalar> {
    v.iter().map(|&x| int(x as i64)).collect()
}

/// `|A|⁻¹ · K · wt(A)`: the dual weight distribution predicted from `A`.
pub fn macwilliams_prediction(code: &LinearCode) -> Result<Vec<ExactScalar>> {
    code.require_prime()?;
    let ck = coding_matrix(code.length(), code.field_order())?;
    let dist = code.weight_distribution()?;
    let size = int(code.size()? as i64);
    Ok(ck.transform(&to_scalars(&dist))?.into_iter().map(|x| x / &size).collect())
}

/// True iff the dual's enumerated weight distribution matches the
/// transform prediction exactly.
pub fn macwilliams_check(code: &LinearCode) -> Result<bool> {
    let predicted = macwilliams_prediction(code)?;
    let dual = code.dual()?.weight_distribution()?;
    Ok(predicted == to_scalars(&dual))
}

fn validate_words(words: &[Vec<u64>], s: u64) -> Result<BTreeSet<&[u64]>> {
    if s < 2 {
        return Err(Error::domain(format!("alphabet size {s} must be at least 2")));
    }
    let first = words.first().ok_or_else(|| Error::domain("code must contain at least one word"))?;
    let n = first.len();
    let mut set = BTreeSet::new();
    for (i, w) in words.iter().enumerate() {
        if w.len() != n {
            return Err(Error::domain(format!("word {} has length {}, expected {n}", i + 1, w.len())));
        }
        if let Some(&bad) = w.iter().find(|&&x| x >= s) {
            return Err(Error::domain(format!("word {} has symbol {bad} outside alphabet of size {s}", i + 1)));
        }
        set.insert(w.as_slice());
    }
    Ok(set)
}

/// `D_j = |C|⁻¹ #{(u, v) ∈ C² : d(u, v) = j}`. Duplicate words are merged.
pub fn distance_enumerator(words: &[Vec<u64>], s: u64) -> Result<Vec<ExactScalar>> {
    let set = validate_words(words, s)?;
    let n = words[0].len();
    let mut counts = vec![0u64; n + 1];
    for u in &set {
        for v in &set {
            counts[u.iter().zip(v.iter()).filter(|(a, b)| a != b).count()] += 1;
        }
    }
    let size = int(set.len() as i64);
    Ok(counts.into_iter().map(|c| int(c as i64) / &size).collect())
}

/// Krawtchouk transform of the distance enumerator.
pub fn delsarte_transform(words: &[Vec<u64>], s: u64) -> Result<Vec<ExactScalar>> {
    let d = distance_enumerator(words, s)?;
    coding_matrix(d.len() - 1, s)?.transform(&d)
}

/// True iff every component of the transformed distance enumerator is ≥ 0.
pub fn delsarte_check(words: &[Vec<u64>], s: u64) -> Result<bool> {
    Ok(delsarte_transform(words, s)?.iter().all(|x| !x.is_negative()))
}

/// `(s - 1)` expressed through `p = 1/s` as `q / p`.
pub fn alphabet_from_probability(p: &ExactScalar) -> ExactScalar {
    (int(1) - p) / p + int(1)
}

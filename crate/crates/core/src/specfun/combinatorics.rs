//! Exact Bernoulli and Stirling numbers.

use super::{SpecError, C64};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::sync::OnceLock;

/// Largest index held in the exact tables.
pub const TABLE_MAX: usize = 64;
const BERNOULLI_MAX: usize = 96;

fn binomial_big(n: usize, k: usize) -> BigInt {
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

fn bernoulli_exact() -> &'static [BigRational] {
    static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // sum_{k=0}^{n} C(n+1,k) B_k = 0, B_1 = -1/2
        let mut b: Vec<BigRational> = Vec::with_capacity(BERNOULLI_MAX + 1);
        b.push(BigRational::one());
        for n in 1..=BERNOULLI_MAX {
            let mut acc = BigRational::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += BigRational::from_integer(binomial_big(n + 1, k)) * bk;
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
        }
        b
    })
}

/// Bernoulli number `B_n` (with `B_1 = -1/2`) as `f64`, `n <= 96`.
pub fn bernoulli_number(n: usize) -> f64 {
    bernoulli_exact()[n].to_f64().unwrap_or(f64::NAN)
}

/// `B_{2j} / (2j)!` for `j = 0..=48`, rounded once from the exact rational.
pub(crate) fn bernoulli_over_factorial() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let b = bernoulli_exact();
        let mut fact = BigInt::one();
        let mut out = vec![1.0];
        for j in 1..=BERNOULLI_MAX / 2 {
            fact *= BigInt::from((2 * j - 1) * (2 * j));
            let v = &b[2 * j] / BigRational::from_integer(fact.clone());
            out.push(v.to_f64().unwrap_or(0.0));
        }
        out
    })
}

fn bernoulli_poly_coeffs() -> &'static [Vec<f64>] {
    static TABLE: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let b = bernoulli_exact();
        (0..=TABLE_MAX + 1)
            .map(|n| {
                // coefficient of x^{n-k} is C(n,k) B_k
                (0..=n)
                    .map(|k| {
                        (BigRational::from_integer(binomial_big(n, k)) * &b[k])
                            .to_f64()
                            .unwrap_or(f64::NAN)
                    })
                    .collect()
            })
            .collect()
    })
}

/// Bernoulli polynomial `B_n(x)` from exact rational coefficients, `n <= 64`.
///
/// Index 65 is also accepted internally so that `ζ(-64, a)` can be formed.
pub fn bernoulli_poly(n: usize, x: C64) -> Result<C64, SpecError> {
    if n > TABLE_MAX {
        return Err(SpecError::Overflow {
            func: "bernoulli_poly",
            reason: format!("n = {n} exceeds {TABLE_MAX}"),
        });
    }
    Ok(bernoulli_poly_unchecked(n, x))
}

pub(crate) fn bernoulli_poly_unchecked(n: usize, x: C64) -> C64 {
    let coeffs = &bernoulli_poly_coeffs()[n];
    // Horner over descending powers: coeffs[k] multiplies x^{n-k}
    let mut acc = C64::new(0.0, 0.0);
    for ck in coeffs.iter() {
        acc = acc * x + ck;
    }
    acc
}

fn stirling_table(kind: StirlingKind) -> &'static [Vec<BigInt>] {
    static SIGNED: OnceLock<Vec<Vec<BigInt>>> = OnceLock::new();
    static SECOND: OnceLock<Vec<Vec<BigInt>>> = OnceLock::new();
    match kind {
        StirlingKind::SignedFirst | StirlingKind::UnsignedFirst => SIGNED.get_or_init(|| {
            let mut t = vec![vec![BigInt::one()]];
            for j in 0..TABLE_MAX {
                let prev = &t[j];
                let mut row = vec![BigInt::zero(); j + 2];
                for p in 0..=j + 1 {
                    let mut v = BigInt::zero();
                    if p >= 1 {
                        v += &prev[p - 1];
                    }
                    if p <= j {
                        v -= BigInt::from(j) * &prev[p];
                    }
                    row[p] = v;
                }
                t.push(row);
            }
            t
        }),
        StirlingKind::Second => SECOND.get_or_init(|| {
            let mut t = vec![vec![BigInt::one()]];
            for j in 0..TABLE_MAX {
                let prev = &t[j];
                let mut row = vec![BigInt::zero(); j + 2];
                for p in 1..=j + 1 {
                    let mut v = &prev[p - 1] + BigInt::zero();
                    if p <= j {
                        v += BigInt::from(p) * &prev[p];
                    }
                    row[p] = v;
                }
                t.push(row);
            }
            t
        }),
    }
}

/// Candidate readings of the expansion coefficients `S_j^{(p)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StirlingKind {
    /// `x(x-1)...(x-j+1) = Σ_p S_j^{(p)} x^p`.
    SignedFirst,
    /// `x(x+1)...(x+j-1) = Σ_p |S_j^{(p)}| x^p`.
    UnsignedFirst,
    /// `x^j = Σ_p S(j,p) x(x-1)...(x-p+1)`.
    Second,
}

impl StirlingKind {
    pub const ALL: [StirlingKind; 3] = [
        StirlingKind::SignedFirst,
        StirlingKind::UnsignedFirst,
        StirlingKind::Second,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StirlingKind::SignedFirst => "signed-first-kind",
            StirlingKind::UnsignedFirst => "unsigned-first-kind",
            StirlingKind::Second => "second-kind",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Exact coefficient; zero when `p > j`. Panics for `j > 64`.
    pub fn coefficient(self, j: usize, p: usize) -> BigInt {
        assert!(j <= TABLE_MAX, "Stirling table holds j <= {TABLE_MAX}");
        if p > j {
            return BigInt::zero();
        }
        let v = stirling_table(self)[j][p].clone();
        match self {
            StirlingKind::UnsignedFirst => {
                if v < BigInt::zero() {
                    -v
                } else {
                    v
                }
            }
            _ => v,
        }
    }

    pub fn coefficient_f64(self, j: usize, p: usize) -> f64 {
        self.coefficient(j, p).to_f64().unwrap_or(f64::NAN)
    }
}

/// Signed Stirling number of the first kind `s(j, p)`, `p <= j <= 64`.
pub fn stirling_first(j: usize, p: usize) -> BigInt {
    StirlingKind::SignedFirst.coefficient(j, p)
}

/// Rising factorial `(x)_n = x(x+1)...(x+n-1)`.
pub fn pochhammer(x: C64, n: usize) -> C64 {
    let mut r = C64::new(1.0, 0.0);
    for i in 0..n {
        r *= x + i as f64;
    }
    r
}

/// Binomial coefficient as `f64`.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut r = 1.0;
    for i in 0..k {
        r = r * (n - i) as f64 / (i + 1) as f64;
    }
    r.round()
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

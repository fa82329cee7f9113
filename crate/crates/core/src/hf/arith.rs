use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::HfError;

/// Least `x >= 0` with `x = residues[i] (mod moduli[i])` for every `i`, for
/// pairwise relatively prime moduli.
pub fn crt_solve(moduli: &[BigUint], residues: &[BigUint]) -> Result<BigUint, HfError> {
    if moduli.len() != residues.len() {
        return Err(HfError::LengthMismatch {
            moduli: moduli.len(),
            residues: residues.len(),
        });
    }
    for (i, (m, r)) in moduli.iter().zip(residues).enumerate() {
        if m.is_zero() {
            return Err(HfError::ZeroModulus(i));
        }
        if r >= m {
            return Err(HfError::ResidueOutOfRange(i));
        }
        if let Some(j) = (0..i).find(|j| !moduli[*j].gcd(m).is_one()) {
            return Err(HfError::NotCoprime(j, i));
        }
    }
    let mut x = BigUint::zero();
    let mut product = BigUint::one();
    for (m, r) in moduli.iter().zip(residues) {
        // x + product*t = r (mod m)
        let inv = (&product % m).modinv(m).unwrap_or_else(BigUint::zero);
        let diff = (r + m - &x % m) % m;
        let t = diff * inv % m;
        x += &product * t;
        product *= m;
    }
    Ok(x)
}

fn beta_modulus(i: usize, y: &BigUint) -> BigUint {
    BigUint::one() + BigUint::from(i + 1) * y
}

/// `(x, y)` with `beta_decode(i, x, y) = xs[i]`, where `y = N!` for
/// `N = max(len, max xs) + 1`.
pub fn beta_encode(xs: &[BigUint]) -> Result<(BigUint, BigUint), HfError> {
    if xs.is_empty() {
        return Err(HfError::EmptySequence);
    }
    let biggest = xs
        .iter()
        .max()
        .expect("nonempty")
        .clone()
        .max(BigUint::from(xs.len()));
    let n = biggest + 1u32;
    let mut y = BigUint::one();
    let mut k = BigUint::one();
    while k <= n {
        y *= &k;
        k += 1u32;
    }
    let moduli: Vec<BigUint> = (0..xs.len()).map(|i| beta_modulus(i, &y)).collect();
    let x = crt_solve(&moduli, xs)?;
    Ok((x, y))
}

/// `x mod (1 + (i+1) y)`.
pub fn beta_decode(i: usize, x: &BigUint, y: &BigUint) -> BigUint {
    x % beta_modulus(i, y)
}

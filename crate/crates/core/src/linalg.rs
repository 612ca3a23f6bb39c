//! Dense symmetric eigensolver, positive-definiteness test, and exact
//! integer characteristic polynomials.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{Float, FromPrimitive, NumAssign, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Floating-point types the spectral code is generic over.
pub trait Scalar: Float + FromPrimitive + NumAssign + Debug + Default + Send + Sync + 'static {
    /// Default eigenvalue comparison tolerance.
    const DEFAULT_TOL: Self;
    /// Default tolerance for comparing the Hoffman bound with χ.
    const DEFAULT_BOUND_TOL: Self;

    fn from_usize_lossy(v: usize) -> Self {
        Self::from_usize(v).expect("usize converts to float")
    }
}

impl Scalar for f64 {
    const DEFAULT_TOL: f64 = 1e-9;
    const DEFAULT_BOUND_TOL: f64 = 1e-6;
}

impl Scalar for f32 {
    const DEFAULT_TOL: f32 = 1e-4;
    const DEFAULT_BOUND_TOL: f32 = 1e-3;
}

pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in descending order with matching unit eigenvectors.
#[derive(Clone, Debug)]
pub struct Eigen<T> {
    pub values: Vec<T>,
    /// `vectors[k]` is the eigenvector for `values[k]`.
    pub vectors: Vec<Vec<T>>,
}

/// Cyclic Jacobi on a dense symmetric `n × n` row-major matrix.
pub fn symmetric_eigen<T: Scalar>(matrix: &[T], n: usize) -> Result<Eigen<T>> {
    assert_eq!(matrix.len(), n * n, "matrix must be n × n");
    let mut a = matrix.to_vec();
    let mut v = vec![T::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = T::one();
    }
    let fro: T = a.iter().fold(T::zero(), |s, &x| s + x * x);
    let eps = T::epsilon();
    let two = T::one() + T::one();
    let mut converged = n <= 1;
    for _ in 0..MAX_SWEEPS {
        let mut off = T::zero();
        for p in 0..n {
            for q in p + 1..n {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if off <= eps * eps * fro || off == T::zero() {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (two * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let t = if theta == T::zero() { T::one() } else { t };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].partial_cmp(&a[i * n + i]).unwrap_or(std::cmp::Ordering::Equal));
    Ok(Eigen {
        values: order.iter().map(|&i| a[i * n + i]).collect(),
        vectors: order.iter().map(|&i| (0..n).map(|k| v[k * n + i]).collect()).collect(),
    })
}

/// `‖M x − λ x‖₂`.
pub fn residual<T: Scalar>(matrix: &[T], n: usize, lambda: T, x: &[T]) -> T {
    let mut s = T::zero();
    for i in 0..n {
        let mut r = -lambda * x[i];
        for j in 0..n {
            r += matrix[i * n + j] * x[j];
        }
        s += r * r;
    }
    s.sqrt()
}

/// Whether a dense symmetric matrix is positive definite (Cholesky succeeds).
pub fn is_positive_definite<T: Scalar>(matrix: &[T], n: usize) -> bool {
    let mut l = vec![T::zero(); n * n];
    for j in 0..n {
        let mut d = matrix[j * n + j];
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if d <= T::zero() {
            return false;
        }
        let d = d.sqrt();
        l[j * n + j] = d;
        for i in j + 1..n {
            let mut s = matrix[i * n + j];
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / d;
        }
    }
    true
}

/// Integer polynomial, coefficients from the constant term upward.
pub type Poly = Vec<BigInt>;

/// Characteristic polynomial `det(xI − M)` of an integer matrix by
/// Faddeev–LeVerrier in exact arithmetic.
pub fn char_poly(matrix: &[i64], n: usize) -> Poly {
    let a: Vec<BigInt> = matrix.iter().map(|&x| BigInt::from(x)).collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // m holds M_k; start with M_1 = I.
    let mut m = vec![BigInt::zero(); n * n];
    for i in 0..n {
        m[i * n + i] = BigInt::one();
    }
    for k in 1..=n {
        let mut am = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                if a[i * n + l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    am[i * n + j] += &a[i * n + l] * &m[l * n + j];
                }
            }
        }
        let trace: BigInt = (0..n).map(|i| am[i * n + i].clone()).sum();
        let c = -(trace / BigInt::from(k));
        for i in 0..n {
            am[i * n + i] += &c;
        }
        coeffs[n - k] = c;
        m = am;
    }
    coeffs
}

fn trim(p: &mut Poly) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn content(p: &Poly) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| num_integer_gcd(&g, c))
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn primitive(mut p: Poly) -> Poly {
    trim(&mut p);
    let c = content(&p);
    if !c.is_zero() && !c.is_one() {
        for x in p.iter_mut() {
            *x = &*x / &c;
        }
    }
    if p.last().is_some_and(|l| l.is_negative()) {
        for x in p.iter_mut() {
            *x = -&*x;
        }
    }
    p
}

fn is_zero_poly(p: &Poly) -> bool {
    p.iter().all(|c| c.is_zero())
}

/// Pseudo-remainder of `a` by `b` (`b` non-zero).
fn pseudo_rem(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !is_zero_poly(&r) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bc;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Primitive greatest common divisor over the integers.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut a = primitive(a.clone());
    let mut b = primitive(b.clone());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !is_zero_poly(&b) {
        let r = primitive(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    primitive(a)
}

pub fn derivative(p: &Poly) -> Poly {
    if p.len() <= 1 {
        return vec![BigInt::zero()];
    }
    p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
}

/// Exact division of `a` by a divisor `b` known to divide it over the rationals.
fn poly_div_exact(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return vec![BigInt::one()];
    }
    // Work over the rationals by scaling with the leading coefficient.
    let lb = b[db].clone();
    let dq = r.len() - 1 - db;
    let scale = num_traits::pow(lb.clone(), dq + 1);
    for x in r.iter_mut() {
        *x *= &scale;
    }
    let mut q = vec![BigInt::zero(); dq + 1];
    for k in (0..=dq).rev() {
        let c = &r[k + db] / &lb;
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &c * bc;
        }
        q[k] = c;
    }
    primitive(q)
}

/// Square-free part of a non-constant polynomial.
pub fn square_free(p: &Poly) -> Poly {
    let p = primitive(p.clone());
    let g = poly_gcd(&p, &derivative(&p));
    if g.len() <= 1 {
        p
    } else {
        poly_div_exact(&p, &g)
    }
}

pub fn eval(p: &Poly, x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
}

/// Decides whether two polynomials share a real root inside
/// `[center − radius, center + radius]`, by a sign change of the square-free
/// part of their gcd.
pub fn common_root_near(a: &Poly, b: &Poly, center: f64, radius: f64) -> bool {
    let g = poly_gcd(a, b);
    if g.len() <= 1 {
        return false;
    }
    let s = square_free(&g);
    let lo = eval(&s, center - radius);
    let hi = eval(&s, center + radius);
    lo == 0.0 || hi == 0.0 || (lo < 0.0) != (hi < 0.0)
}

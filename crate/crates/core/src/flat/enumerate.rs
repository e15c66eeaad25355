//! Exact lattice reduction and short-vector enumeration on Gram forms.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactnum::{rat, Ldl, MatQ, MatZ, Rational};

/// LLL-reduces the basis behind a positive-definite Gram form, exactly.
///
/// Returns `(R, V)` with `V` unimodular and `R = Vᵀ·G·V`. Uses the Lovász
/// constant 3/4.
pub fn lll_reduce(gram: &MatQ) -> (MatQ, MatZ) {
    let n = gram.dim();
    let mut g = Work::new(gram);
    let mut v = MatZ::identity(n);
    let delta = rat(3, 4);
    let half = rat(1, 2);
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let f = g.factor();
            let mu = f.l.get(k, j).clone();
            let q = (&mu + &half).floor().to_integer();
            if !q.is_zero() {
                g.sub_multiple(k, j, &q);
                v = column_op(&v, k, j, &q);
            }
        }
        let f = g.factor();
        let mu = f.l.get(k, k - 1);
        if f.d[k] >= (&delta - mu * mu) * &f.d[k - 1] {
            k += 1;
        } else {
            g.swap(k, k - 1);
            v = swap_columns(&v, k, k - 1);
            k = (k - 1).max(1);
        }
    }
    (g.to_matq(), v)
}

/// Calls `visit(x, Q(x))` once for every nonzero `x ∈ Zⁿ` with
/// `Q(x) = xᵀ·G·x <= bound`, choosing from each pair `±x` the member whose
/// last nonzero coordinate is positive.
///
/// Bounds come from the exact LDL factorization of `G`, so the enumeration
/// is complete: nothing is lost to rounding.
pub fn enumerate_short(gram: &MatQ, bound: &Rational, mut visit: impl FnMut(&[BigInt], &Rational)) {
    let ldl = Ldl::positive_definite(gram).expect("Gram form must be positive definite");
    let n = gram.dim();
    let mut x = vec![BigInt::zero(); n];
    let mut state = Search {
        ldl: &ldl,
        bound,
        x: &mut x,
        visit: &mut visit,
    };
    state.level(n - 1, &Rational::zero(), true);
}

struct Search<'a, F> {
    ldl: &'a Ldl,
    bound: &'a Rational,
    x: &'a mut Vec<BigInt>,
    visit: &'a mut F,
}

impl<F: FnMut(&[BigInt], &Rational)> Search<'_, F> {
    fn level(&mut self, i: usize, partial: &Rational, upper_zero: bool) {
        let n = self.x.len();
        let center: Rational = -(i + 1..n)
            .map(|j| self.ldl.l.get(j, i) * Rational::from_integer(self.x[j].clone()))
            .sum::<Rational>();
        let d = &self.ldl.d[i];
        let room = self.bound - partial;
        let start = center.floor().to_integer();

        // downwards from floor(center), then upwards from floor(center) + 1
        let mut xi = start.clone();
        loop {
            if upper_zero && xi.is_negative() {
                break;
            }
            if !self.try_value(i, &xi, &center, d, &room, partial, upper_zero) {
                break;
            }
            xi -= 1;
        }
        let mut xi = start + 1;
        while self.try_value(i, &xi, &center, d, &room, partial, upper_zero) {
            xi += 1;
        }
        self.x[i] = BigInt::zero();
    }

    /// Descends with `x[i] = xi` if it fits; returns whether it did.
    #[allow(clippy::too_many_arguments)]
    fn try_value(
        &mut self,
        i: usize,
        xi: &BigInt,
        center: &Rational,
        d: &Rational,
        room: &Rational,
        partial: &Rational,
        upper_zero: bool,
    ) -> bool {
        let t = Rational::from_integer(xi.clone()) - center;
        let cost = d * &t * &t;
        if &cost > room {
            return false;
        }
        self.x[i] = xi.clone();
        let total = partial + cost;
        let still_zero = upper_zero && xi.is_zero();
        if i == 0 {
            if !still_zero {
                (self.visit)(self.x, &total);
            }
        } else {
            self.level(i - 1, &total, still_zero);
        }
        true
    }
}

/// Flips the sign so that the last nonzero coordinate is positive.
pub fn normalize_sign(x: &mut [BigInt]) {
    if let Some(last) = x.iter().rev().find(|c| !c.is_zero()) {
        if last.is_negative() {
            for c in x.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
    }
}

/// Symmetric working copy of a Gram form under elementary column operations.
struct Work {
    n: usize,
    g: Vec<Rational>,
}

impl Work {
    fn new(m: &MatQ) -> Work {
        Work {
            n: m.dim(),
            g: m.entries().to_vec(),
        }
    }

    fn to_matq(&self) -> MatQ {
        MatQ::new(self.n, self.g.clone()).expect("square")
    }

    fn factor(&self) -> Ldl {
        Ldl::positive_definite(&self.to_matq()).expect("reduction keeps the form definite")
    }

    /// Basis change `b_k -= q·b_j`.
    fn sub_multiple(&mut self, k: usize, j: usize, q: &BigInt) {
        let n = self.n;
        let q = Rational::from_integer(q.clone());
        for c in 0..n {
            let s = &q * &self.g[j * n + c];
            self.g[k * n + c] -= s;
        }
        for r in 0..n {
            let s = &q * &self.g[r * n + j];
            self.g[r * n + k] -= s;
        }
    }

    fn swap(&mut self, a: usize, b: usize) {
        let n = self.n;
        for c in 0..n {
            self.g.swap(a * n + c, b * n + c);
        }
        for r in 0..n {
            self.g.swap(r * n + a, r * n + b);
        }
    }
}

fn column_op(v: &MatZ, k: usize, j: usize, q: &BigInt) -> MatZ {
    MatZ::from_fn(v.dim(), |r, c| {
        if c == k {
            v.get(r, k) - q * v.get(r, j)
        } else {
            v.get(r, c).clone()
        }
    })
}

fn swap_columns(v: &MatZ, a: usize, b: usize) -> MatZ {
    MatZ::from_fn(v.dim(), |r, c| {
        let c = if c == a {
            b
        } else if c == b {
            a
        } else {
            c
        };
        v.get(r, c).clone()
    })
}

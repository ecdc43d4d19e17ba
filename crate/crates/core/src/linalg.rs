//! Dense matrices and univariate polynomials over [`Scalar`].
//!
//! Sizes here are tiny (14x14 at most), so everything is plain Gaussian
//! elimination on owned rows.

use std::fmt;

use crate::scalars::{Field, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: Field) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] += &(a * b);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            acc += self.get(i, i);
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut acc = Matrix::identity(self.rows, self.field);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Row-reduces in place and returns the pivot columns.
    fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self.get(r, c).inverse().expect("nonzero pivot");
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let factor = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = self.get(i, j) - &(&factor * self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.get(r, f);
                }
                v
            })
            .collect()
    }

    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inverse().expect("nonzero pivot");
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&factor * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Characteristic polynomial `det(t I - A)`, via reduction to upper
    /// Hessenberg form by elementary similarities.
    pub fn characteristic_polynomial(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let f = self.field;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            if i != m {
                for c in 0..n {
                    h.data.swap(i * n + c, m * n + c);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let pivot_inv = h.get(m, m - 1).inverse().expect("nonzero pivot");
            for j in m + 1..n {
                if h.get(j, m - 1).is_zero() {
                    continue;
                }
                let u = h.get(j, m - 1) * &pivot_inv;
                // row_j -= u row_m, then col_m += u col_j
                for c in 0..n {
                    let v = h.get(j, c) - &(&u * h.get(m, c));
                    h.set(j, c, v);
                }
                for r in 0..n {
                    let v = h.get(r, m) + &(&u * h.get(r, j));
                    h.set(r, m, v);
                }
            }
        }
        // p[k] = charpoly of the leading k x k block
        let mut p = vec![Poly::one(f)];
        for m in 0..n {
            let x_minus = Poly::new(f, vec![-h.get(m, m).clone(), f.one()]);
            let mut next = x_minus.mul(&p[m]);
            let mut t = f.one();
            for i in (0..m).rev() {
                t = &t * h.get(i + 1, i);
                if t.is_zero() {
                    break;
                }
                let c = &t * h.get(i, m);
                if !c.is_zero() {
                    next = next.sub(&p[i].scale(&c));
                }
            }
            p.push(next);
        }
        p.pop().expect("n + 1 entries")
    }

    /// Minimal polynomial, as the lcm of the local minimal polynomials of
    /// the standard basis vectors (Krylov sequences).
    pub fn minimal_polynomial(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let mut acc = Poly::one(self.field);
        for j in 0..self.cols {
            let mut e = vec![self.field.zero(); self.cols];
            e[j] = self.field.one();
            let local = self.local_minimal_polynomial(e);
            acc = acc.lcm(&local);
        }
        acc
    }

    /// Monic polynomial `p` of least degree with `p(self) v = 0`.
    fn local_minimal_polynomial(&self, v: Vec<Scalar>) -> Poly {
        let field = self.field;
        // Echelon rows (vector, polynomial it came from, pivot index).
        let mut basis: Vec<(Vec<Scalar>, Poly, usize)> = Vec::new();
        let mut current = v;
        for k in 0..=self.cols {
            let mut w = current.clone();
            let mut poly = Poly::monomial(field, k);
            for (row, row_poly, pivot) in &basis {
                if w[*pivot].is_zero() {
                    continue;
                }
                let c = w[*pivot].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    *x -= &(&c * y);
                }
                poly = poly.sub(&row_poly.scale(&c));
            }
            match w.iter().position(|x| !x.is_zero()) {
                None => return poly.monic(),
                Some(p) => {
                    let inv = w[p].inverse().expect("nonzero pivot");
                    let w: Vec<Scalar> = w.iter().map(|x| x * &inv).collect();
                    let poly = poly.scale(&inv);
                    // Keep earlier rows reduced at the new pivot.
                    for (row, row_poly, _) in basis.iter_mut() {
                        if row[p].is_zero() {
                            continue;
                        }
                        let c = row[p].clone();
                        for (x, y) in row.iter_mut().zip(&w) {
                            *x -= &(&c * y);
                        }
                        *row_poly = row_poly.sub(&poly.scale(&c));
                    }
                    basis.push((w, poly, p));
                }
            }
            current = self.mul_vec(&current);
        }
        unreachable!("Krylov sequence must become dependent within n+1 steps")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dense univariate polynomial, coefficients from the constant term up.
/// Never carries trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        Poly::new(field, vec![])
    }

    pub fn one(field: Field) -> Self {
        Poly::new(field, vec![field.one()])
    }

    pub fn monomial(field: Field, k: usize) -> Self {
        let mut c = vec![field.zero(); k + 1];
        c[k] = field.one();
        Poly::new(field, c)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> &Scalar {
        self.coeffs
            .last()
            .expect("zero polynomial has no leading coefficient")
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self
            .leading()
            .inverse()
            .expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.field.zero();
        Poly::new(
            self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut c = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, c)
    }

    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let inv = divisor
            .leading()
            .inverse()
            .expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().expect("nonempty") * &inv;
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &(&c * b);
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        let g = self.gcd(other);
        let (q, _) = self.mul(other).div_rem(&g);
        q.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| &self.field.from_int(i as i64) * c)
                .collect(),
        )
    }

    /// True iff the polynomial has no repeated root over the algebraic closure.
    pub fn is_square_free(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `p / gcd(p, p')`: the same roots, each simple.
    pub fn square_free_part(&self) -> Poly {
        let (q, _) = self.div_rem(&self.gcd(&self.derivative()));
        q.monic()
    }

    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let mut acc = Matrix::zeros(m.rows(), m.cols(), self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..m.rows() {
                let v = acc.get(i, i) + c;
                acc.set(i, i, v);
            }
        }
        acc
    }
}

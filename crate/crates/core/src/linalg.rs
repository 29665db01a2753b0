//! Vectors and matrices on the basis `e1, e2` of the rank-two module, the
//! symmetric square on `e1^2, e1 e2, e2^2`, and exact rank over fields.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ring::{RingElem, RingRef};

/// `x e1 + y e2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vec2 {
    pub x: RingElem,
    pub y: RingElem,
}

impl Vec2 {
    pub fn new(x: RingElem, y: RingElem) -> Result<Self> {
        x.check_same_ring(&y)?;
        Ok(Vec2 { x, y })
    }

    pub fn from_ints(ring: &RingRef, x: i64, y: i64) -> Self {
        Vec2 {
            x: RingElem::from_int(ring, x),
            y: RingElem::from_int(ring, y),
        }
    }

    pub fn e1(ring: &RingRef) -> Self {
        Self::from_ints(ring, 1, 0)
    }

    pub fn e2(ring: &RingRef) -> Self {
        Self::from_ints(ring, 0, 1)
    }

    pub fn ring(&self) -> &RingRef {
        self.x.ring()
    }

    pub fn add(&self, other: &Vec2) -> Vec2 {
        Vec2 {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    pub fn scale(&self, s: &RingElem) -> Vec2 {
        Vec2 {
            x: s * &self.x,
            y: s * &self.y,
        }
    }

    /// Coefficient of `self ^ other` on `e1 ^ e2`.
    pub fn wedge(&self, other: &Vec2) -> RingElem {
        &self.x * &other.y - &self.y * &other.x
    }

    /// The product `self . other` in `Sym^2`.
    pub fn sym_product(&self, other: &Vec2) -> Sym2 {
        Sym2 {
            e11: &self.x * &other.x,
            e12: &self.x * &other.y + &self.y * &other.x,
            e22: &self.y * &other.y,
        }
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Coordinates on `e1^2, e1 e2, e2^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sym2 {
    pub e11: RingElem,
    pub e12: RingElem,
    pub e22: RingElem,
}

impl Sym2 {
    pub fn new(e11: RingElem, e12: RingElem, e22: RingElem) -> Result<Self> {
        e11.check_same_ring(&e12)?;
        e11.check_same_ring(&e22)?;
        Ok(Sym2 { e11, e12, e22 })
    }

    pub fn sub(&self, other: &Sym2) -> Sym2 {
        Sym2 {
            e11: &self.e11 - &other.e11,
            e12: &self.e12 - &other.e12,
            e22: &self.e22 - &other.e22,
        }
    }

    pub fn neg(&self) -> Sym2 {
        Sym2 {
            e11: -&self.e11,
            e12: -&self.e12,
            e22: -&self.e22,
        }
    }

    pub fn to_array(&self) -> [RingElem; 3] {
        [self.e11.clone(), self.e12.clone(), self.e22.clone()]
    }
}

/// 2x2 matrix acting on column vectors, `rows[i][j]` in row `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    rows: [[RingElem; 2]; 2],
}

impl Mat2 {
    pub fn new(rows: [[RingElem; 2]; 2]) -> Result<Self> {
        for r in &rows {
            for e in r {
                e.check_same_ring(&rows[0][0])?;
            }
        }
        Ok(Mat2 { rows })
    }

    pub fn from_entries(
        m11: RingElem,
        m12: RingElem,
        m21: RingElem,
        m22: RingElem,
    ) -> Result<Self> {
        Mat2::new([[m11, m12], [m21, m22]])
    }

    pub fn from_ints(ring: &RingRef, rows: [[i64; 2]; 2]) -> Self {
        Mat2 {
            rows: rows.map(|r| r.map(|v| RingElem::from_int(ring, v))),
        }
    }

    pub fn scalar(s: &RingElem) -> Self {
        let z = RingElem::zero(s.ring());
        Mat2 {
            rows: [[s.clone(), z.clone()], [z, s.clone()]],
        }
    }

    pub fn identity(ring: &RingRef) -> Self {
        Mat2::scalar(&RingElem::one(ring))
    }

    pub fn zero(ring: &RingRef) -> Self {
        Mat2::scalar(&RingElem::zero(ring))
    }

    pub fn ring(&self) -> &RingRef {
        self.rows[0][0].ring()
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElem {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[[RingElem; 2]; 2] {
        &self.rows
    }

    pub fn trace(&self) -> RingElem {
        &self.rows[0][0] + &self.rows[1][1]
    }

    pub fn det(&self) -> RingElem {
        &self.rows[0][0] * &self.rows[1][1] - &self.rows[0][1] * &self.rows[1][0]
    }

    pub fn transpose(&self) -> Mat2 {
        let r = &self.rows;
        Mat2 {
            rows: [
                [r[0][0].clone(), r[1][0].clone()],
                [r[0][1].clone(), r[1][1].clone()],
            ],
        }
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let a = &self.rows;
        let b = &other.rows;
        let entry = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Mat2 {
            rows: [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]],
        }
    }

    pub fn add(&self, other: &Mat2) -> Mat2 {
        let mut rows = self.rows.clone();
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = &*e + &other.rows[i][j];
            }
        }
        Mat2 { rows }
    }

    pub fn scale(&self, s: &RingElem) -> Mat2 {
        Mat2 {
            rows: self.rows.clone().map(|r| r.map(|e| s * &e)),
        }
    }

    pub fn half(&self) -> Mat2 {
        Mat2 {
            rows: self.rows.clone().map(|r| r.map(|e| e.half())),
        }
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        Vec2 {
            x: &self.rows[0][0] * &v.x + &self.rows[0][1] * &v.y,
            y: &self.rows[1][0] * &v.x + &self.rows[1][1] * &v.y,
        }
    }

    pub fn column(&self, j: usize) -> Vec2 {
        Vec2 {
            x: self.rows[0][j].clone(),
            y: self.rows[1][j].clone(),
        }
    }

    /// Position and values of the first differing entry.
    pub fn first_difference(&self, other: &Mat2) -> Option<(usize, usize, RingElem, RingElem)> {
        for i in 0..2 {
            for j in 0..2 {
                if self.rows[i][j] != other.rows[i][j] {
                    return Some((i, j, self.rows[i][j].clone(), other.rows[i][j].clone()));
                }
            }
        }
        None
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.rows;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            r[0][0], r[0][1], r[1][0], r[1][1]
        )
    }
}

/// Rank of a matrix (given by rows) over a field, by Gaussian elimination.
pub fn rank_over_field(rows: &[Vec<RingElem>]) -> Result<usize> {
    let Some(first) = rows.first().and_then(|r| r.first()) else {
        return Ok(0);
    };
    let ring = first.ring().clone();
    if !ring.is_field() {
        return Err(Error::NotAField(ring.to_string()));
    }
    let mut m: Vec<Vec<RingElem>> = rows.to_vec();
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv()?;
        let pivot_row: Vec<RingElem> = m[rank].iter().map(|e| e * &inv).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (c, p) in pivot_row.iter().enumerate() {
                    row[c] = &row[c] - &(&factor * p);
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Ok(rank)
}

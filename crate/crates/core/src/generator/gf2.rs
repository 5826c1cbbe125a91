//! Dense matrices over the two-element field.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row-major entries; anything odd counts as 1.
    pub fn from_entries(rows: usize, cols: usize, entries: &[u8]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must match the shape");
        Mat {
            rows,
            cols,
            data: entries.iter().map(|e| e & 1).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u8] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        self.data[r * self.cols + c] = v & 1;
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) == 1 {
                    for j in 0..other.cols {
                        out.data[i * other.cols + j] ^= other.get(k, j);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sum"
        );
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// `[[a, b], [c, d]]`; blocks must have compatible shapes.
    pub fn block(a: &Mat, b: &Mat, c: &Mat, d: &Mat) -> Mat {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let (rows, cols) = (a.rows + c.rows, a.cols + b.cols);
        let mut m = Mat::zeros(rows, cols);
        for (blk, r0, c0) in [(a, 0, 0), (b, 0, a.cols), (c, a.rows, 0), (d, a.rows, a.cols)] {
            for r in 0..blk.rows {
                for col in 0..blk.cols {
                    m.set(r0 + r, c0 + col, blk.get(r, col));
                }
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<u8>> = (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        echelon(rows, self.cols).pivots.len()
    }

    /// Basis of `{x : self · x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u8>> {
        let rows: Vec<Vec<u8>> = (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect();
        let ech = echelon(rows, self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![0u8; self.cols];
                x[f] = 1;
                for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                    x[p] = row[f];
                }
                x
            })
            .collect()
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(";")?;
            }
            for c in 0..self.cols {
                write!(f, "{}", self.get(r, c))?;
            }
        }
        f.write_str("]")
    }
}

/// Reduced row echelon form of a list of vectors.
pub struct Echelon {
    pub rows: Vec<Vec<u8>>,
    pub pivots: Vec<usize>,
}

pub fn echelon(mut rows: Vec<Vec<u8>>, len: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..len {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] == 1) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] == 1 {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x ^= y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

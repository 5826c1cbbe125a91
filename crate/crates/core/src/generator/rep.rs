//! Representations of the linearly oriented quiver `1 → 2 → … → n` over
//! the two-element field.

use std::collections::BTreeSet;

use super::gf2::{echelon, Mat};

/// Vector spaces at the vertices and one matrix per arrow `i → i+1`
/// (shape `dims[i+1] × dims[i]`). Vertices are 0-based here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    dims: Vec<usize>,
    arrows: Vec<Mat>,
}

/// A morphism: one matrix per vertex, `W_i × V_i`.
pub type Morphism = Vec<Mat>;

impl MatrixRep {
    pub fn new(dims: Vec<usize>, arrows: Vec<Mat>) -> Self {
        assert_eq!(
            arrows.len() + 1,
            dims.len().max(1),
            "one arrow between consecutive vertices"
        );
        for (i, m) in arrows.iter().enumerate() {
            assert_eq!(
                (m.rows(), m.cols()),
                (dims[i + 1], dims[i]),
                "arrow {i} has the wrong shape"
            );
        }
        MatrixRep { dims, arrows }
    }

    pub fn zero(n: usize) -> Self {
        let arrows = (1..n).map(|_| Mat::zeros(0, 0)).collect();
        MatrixRep::new(vec![0; n], arrows)
    }

    /// The interval module on vertices `a..=b` (1-based, as in `[a,b]`).
    pub fn interval(n: usize, a: usize, b: usize) -> Self {
        assert!(1 <= a && a <= b && b <= n, "interval [{a},{b}] outside 1..={n}");
        let dims: Vec<usize> = (1..=n).map(|v| usize::from(a <= v && v <= b)).collect();
        let arrows = (0..n - 1)
            .map(|i| {
                let (s, t) = (dims[i], dims[i + 1]);
                if s == 1 && t == 1 {
                    Mat::identity(1)
                } else {
                    Mat::zeros(t, s)
                }
            })
            .collect();
        MatrixRep::new(dims, arrows)
    }

    pub fn vertices(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn arrow(&self, i: usize) -> &Mat {
        &self.arrows[i]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn direct_sum(&self, other: &MatrixRep) -> MatrixRep {
        assert_eq!(self.vertices(), other.vertices());
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let arrows = self
            .arrows
            .iter()
            .zip(&other.arrows)
            .enumerate()
            .map(|(i, (x, y))| {
                Mat::block(
                    x,
                    &Mat::zeros(self.dims[i + 1], other.dims[i]),
                    &Mat::zeros(other.dims[i + 1], self.dims[i]),
                    y,
                )
            })
            .collect();
        MatrixRep::new(dims, arrows)
    }

    /// Rank of the composite map from vertex `i` to vertex `j` (`i ≤ j`).
    fn path_rank(&self, i: usize, j: usize) -> usize {
        let mut m = Mat::identity(self.dims[i]);
        for k in i..j {
            m = self.arrows[k].mul(&m);
        }
        m.rank()
    }

    /// Interval summands `[a,b]` (1-based) with multiplicity, sorted. Uses
    /// the rank of path composites: `[i,j]` occurs
    /// `r(i,j) − r(i−1,j) − r(i,j+1) + r(i−1,j+1)` times.
    pub fn decompose(&self) -> Vec<(usize, usize)> {
        let n = self.vertices();
        let r = |i: isize, j: isize| -> isize {
            if i < 0 || j >= n as isize || i > j {
                0
            } else {
                self.path_rank(i as usize, j as usize) as isize
            }
        };
        let mut out = Vec::new();
        for i in 0..n as isize {
            for j in i..n as isize {
                let mult = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1);
                assert!(mult >= 0, "rank formula produced a negative multiplicity");
                for _ in 0..mult {
                    out.push((i as usize + 1, j as usize + 1));
                }
            }
        }
        out
    }
}

/// Basis of `Hom(V, W)` as the nullspace of the commuting-square equations
/// `φ_{i+1} V_i = W_i φ_i`.
pub fn hom_basis(v: &MatrixRep, w: &MatrixRep) -> Vec<Morphism> {
    let n = v.vertices();
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for i in 0..n {
        offsets.push(offsets[i] + w.dims[i] * v.dims[i]);
    }
    let unknowns = offsets[n];
    let var = |i: usize, r: usize, c: usize| offsets[i] + r * v.dims[i] + c;

    let mut eqs: Vec<Vec<u8>> = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for r in 0..w.dims[i + 1] {
            for s in 0..v.dims[i] {
                let mut row = vec![0u8; unknowns];
                for k in 0..v.dims[i + 1] {
                    if v.arrows[i].get(k, s) == 1 {
                        row[var(i + 1, r, k)] ^= 1;
                    }
                }
                for k in 0..w.dims[i] {
                    if w.arrows[i].get(r, k) == 1 {
                        row[var(i, k, s)] ^= 1;
                    }
                }
                eqs.push(row);
            }
        }
    }
    let flat: Vec<u8> = eqs.concat();
    let system = Mat::from_entries(eqs.len(), unknowns, &flat);
    system
        .nullspace()
        .into_iter()
        .map(|x| {
            (0..n)
                .map(|i| Mat::from_entries(w.dims[i], v.dims[i], &x[offsets[i]..offsets[i + 1]]))
                .collect()
        })
        .collect()
}

pub fn hom_dim(v: &MatrixRep, w: &MatrixRep) -> usize {
    hom_basis(v, w).len()
}

pub fn is_injective(v: &MatrixRep, f: &Morphism) -> bool {
    f.iter().zip(&v.dims).all(|(m, &d)| m.rank() == d)
}

/// Whether some homomorphism `V → W` is injective, by enumerating every
/// element of the Hom space.
pub fn has_injection(v: &MatrixRep, w: &MatrixRep) -> bool {
    if v.total_dim() > w.total_dim() || v.dims.iter().zip(&w.dims).any(|(a, b)| a > b) {
        return false;
    }
    let basis = hom_basis(v, w);
    assert!(basis.len() < 32, "Hom space too large to enumerate");
    (0u32..1 << basis.len()).any(|mask| {
        let f: Morphism = (0..v.vertices())
            .map(|i| {
                basis
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .fold(Mat::zeros(w.dims[i], v.dims[i]), |acc, (_, g)| acc.add(&g[i]))
            })
            .collect();
        is_injective(v, &f)
    })
}

/// `⟨x, y⟩ = Σ x_i y_i − Σ x_i y_{i+1}` for the quiver `1 → 2 → … → n`.
pub fn euler_form(x: &[usize], y: &[usize]) -> i64 {
    let diag: i64 = x.iter().zip(y).map(|(a, b)| (a * b) as i64).sum();
    let arrows: i64 = (0..x.len().saturating_sub(1))
        .map(|i| (x[i] * y[i + 1]) as i64)
        .sum();
    diag - arrows
}

/// Coordinates for extensions `0 → A → B → C → 0` with `B_i = A_i ⊕ C_i`:
/// each arrow of `B` is `[[φ^A_i, X_i], [0, φ^C_i]]` with `X_i : C_i → A_{i+1}`.
/// Two choices of `X` give equivalent extensions iff they differ by
/// `δh_i = φ^A_i h_i + h_{i+1} φ^C_i` for some `h_i : C_i → A_i`.
pub struct ExtCoordinates<'a> {
    c: &'a MatrixRep,
    a: &'a MatrixRep,
    offsets: Vec<usize>,
}

impl<'a> ExtCoordinates<'a> {
    pub fn new(c: &'a MatrixRep, a: &'a MatrixRep) -> Self {
        let n = c.vertices();
        let mut offsets = vec![0];
        for i in 0..n.saturating_sub(1) {
            offsets.push(offsets[i] + a.dims[i + 1] * c.dims[i]);
        }
        ExtCoordinates { c, a, offsets }
    }

    /// Number of coordinates of `X`.
    pub fn len(&self) -> usize {
        *self.offsets.last().expect("offsets start at zero")
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn block(&self, x: &[u8], i: usize) -> Mat {
        Mat::from_entries(
            self.a.dims[i + 1],
            self.c.dims[i],
            &x[self.offsets[i]..self.offsets[i + 1]],
        )
    }

    /// Number of coordinates of `h`.
    pub fn cochain_len(&self) -> usize {
        (0..self.c.vertices())
            .map(|i| self.a.dims[i] * self.c.dims[i])
            .sum()
    }

    /// `δh` for `h` given in row-major blocks per vertex.
    pub fn coboundary(&self, h: &[u8]) -> Vec<u8> {
        let n = self.c.vertices();
        let mut hs = Vec::with_capacity(n);
        let mut pos = 0;
        for i in 0..n {
            let len = self.a.dims[i] * self.c.dims[i];
            hs.push(Mat::from_entries(
                self.a.dims[i],
                self.c.dims[i],
                &h[pos..pos + len],
            ));
            pos += len;
        }
        let mut out = Vec::with_capacity(self.len());
        for i in 0..n.saturating_sub(1) {
            let d = self.a.arrows[i]
                .mul(&hs[i])
                .add(&hs[i + 1].mul(&self.c.arrows[i]));
            out.extend_from_slice(d.entries());
        }
        out
    }

    /// Image of `δ` spanned by the coboundaries of the unit cochains.
    pub fn coboundary_span(&self) -> Vec<Vec<u8>> {
        let m = self.cochain_len();
        (0..m)
            .map(|k| {
                let mut h = vec![0u8; m];
                h[k] = 1;
                self.coboundary(&h)
            })
            .collect()
    }

    /// One representative per equivalence class: vectors supported on the
    /// coordinates that are not pivots of the coboundary span.
    pub fn coset_representatives(&self) -> Vec<Vec<u8>> {
        let ech = echelon(self.coboundary_span(), self.len());
        let free: Vec<usize> = (0..self.len()).filter(|c| !ech.pivots.contains(c)).collect();
        assert!(free.len() < 32, "extension space too large to enumerate");
        (0u32..1 << free.len())
            .map(|mask| {
                let mut x = vec![0u8; self.len()];
                for (k, &f) in free.iter().enumerate() {
                    x[f] = (mask >> k & 1) as u8;
                }
                x
            })
            .collect()
    }

    pub fn middle(&self, x: &[u8]) -> MatrixRep {
        let n = self.c.vertices();
        let dims = (0..n).map(|i| self.a.dims[i] + self.c.dims[i]).collect();
        let arrows = (0..n.saturating_sub(1))
            .map(|i| {
                Mat::block(
                    &self.a.arrows[i],
                    &self.block(x, i),
                    &Mat::zeros(self.c.dims[i + 1], self.a.dims[i]),
                    &self.c.arrows[i],
                )
            })
            .collect();
        MatrixRep::new(dims, arrows)
    }
}

/// `dim Ext(C, A)` by exhaustively listing every extension datum `X` and
/// every cochain `h`, and counting classes of `X` modulo all `δh`.
pub fn ext_dim_bruteforce(c: &MatrixRep, a: &MatrixRep) -> usize {
    let coords = ExtCoordinates::new(c, a);
    let (z, m) = (coords.len(), coords.cochain_len());
    assert!(z <= 20 && m <= 20, "brute force limited to small representations");
    let to_bits = |mask: u32, len: usize| -> Vec<u8> { (0..len).map(|k| (mask >> k & 1) as u8).collect() };
    let boundaries: BTreeSet<Vec<u8>> = (0u32..1 << m)
        .map(|h| coords.coboundary(&to_bits(h, m)))
        .collect();
    let classes: BTreeSet<Vec<u8>> = (0u32..1 << z)
        .map(|x| {
            let x = to_bits(x, z);
            boundaries
                .iter()
                .map(|b| x.iter().zip(b).map(|(p, q)| p ^ q).collect::<Vec<u8>>())
                .min()
                .expect("δ0 = 0 is always a boundary")
        })
        .collect();
    let count = classes.len();
    assert!(count.is_power_of_two(), "classes form a vector space");
    count.trailing_zeros() as usize
}

//! Small fixed-size linear algebra over ℝ⁴ and ℝ³.
//!
//! Everything here is plain arrays and hand-rolled determinants; the sizes
//! never exceed 4×4 so there is nothing to gain from a matrix library.

/// A point or direction in ℝ⁴.
pub type Vec4 = [f64; 4];
/// A point or direction in ℝ³ (the imaginary quaternion space, mostly).
pub type Vec3 = [f64; 3];

pub fn dot4(a: &Vec4, b: &Vec4) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

pub fn norm4(a: &Vec4) -> f64 {
    dot4(a, a).sqrt()
}

pub fn scale4(a: &Vec4, s: f64) -> Vec4 {
    [a[0] * s, a[1] * s, a[2] * s, a[3] * s]
}

pub fn add4(a: &Vec4, b: &Vec4) -> Vec4 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

pub fn sub4(a: &Vec4, b: &Vec4) -> Vec4 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

pub fn normalize4(a: &Vec4) -> Vec4 {
    scale4(a, 1.0 / norm4(a))
}

pub fn dot3(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross3(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm3(a: &Vec3) -> f64 {
    dot3(a, a).sqrt()
}

pub fn sub3(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Determinant of the 4×4 matrix with the given columns.
pub fn det4(c0: &Vec4, c1: &Vec4, c2: &Vec4, c3: &Vec4) -> f64 {
    let m = [c0, c1, c2, c3];
    let mut det = 0.0;
    // Laplace expansion along row 0.
    for (j, col) in m.iter().enumerate() {
        let mut sub = [[0.0; 3]; 3];
        let mut cj = 0;
        for (k, other) in m.iter().enumerate() {
            if k == j {
                continue;
            }
            sub[0][cj] = other[1];
            sub[1][cj] = other[2];
            sub[2][cj] = other[3];
            cj += 1;
        }
        let minor = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1])
            - sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0])
            + sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        det += sign * col[0] * minor;
    }
    det
}

/// Column-major 4×4 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4 {
    pub cols: [Vec4; 4],
}

impl Mat4 {
    pub fn identity() -> Self {
        let mut cols = [[0.0; 4]; 4];
        for (i, c) in cols.iter_mut().enumerate() {
            c[i] = 1.0;
        }
        Mat4 { cols }
    }

    pub fn from_cols(cols: [Vec4; 4]) -> Self {
        Mat4 { cols }
    }

    pub fn det(&self) -> f64 {
        det4(&self.cols[0], &self.cols[1], &self.cols[2], &self.cols[3])
    }

    pub fn apply(&self, v: &Vec4) -> Vec4 {
        let mut out = [0.0; 4];
        for (j, col) in self.cols.iter().enumerate() {
            for i in 0..4 {
                out[i] += col[i] * v[j];
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Mat4) -> Mat4 {
        let mut cols = [[0.0; 4]; 4];
        for (j, c) in cols.iter_mut().enumerate() {
            *c = self.apply(&rhs.cols[j]);
        }
        Mat4 { cols }
    }

    /// Inverse by Gauss-Jordan with partial pivoting. Returns `None` when the
    /// pivot drops below `1e-14` of the largest entry.
    pub fn inverse(&self) -> Option<Mat4> {
        let mut a = [[0.0f64; 8]; 4];
        for i in 0..4 {
            for j in 0..4 {
                a[i][j] = self.cols[j][i];
            }
            a[i][4 + i] = 1.0;
        }
        let scale = a
            .iter()
            .flat_map(|r| r[..4].iter())
            .fold(0.0f64, |m, x| m.max(x.abs()))
            .max(1.0);
        for col in 0..4 {
            let (pivot_row, pivot) = (col..4)
                .map(|r| (r, a[r][col].abs()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .unwrap();
            if pivot < 1e-14 * scale {
                return None;
            }
            a.swap(col, pivot_row);
            let p = a[col][col];
            for x in a[col].iter_mut() {
                *x /= p;
            }
            for r in 0..4 {
                if r != col {
                    let f = a[r][col];
                    for c in 0..8 {
                        a[r][c] -= f * a[col][c];
                    }
                }
            }
        }
        let mut cols = [[0.0; 4]; 4];
        for (j, c) in cols.iter_mut().enumerate() {
            for (i, x) in c.iter_mut().enumerate() {
                *x = a[i][4 + j];
            }
        }
        Some(Mat4 { cols })
    }
}

/// Gram-Schmidt on an ordered pair, preserving the span and the orientation
/// of the pair. Returns `None` when the vectors are (nearly) dependent.
pub fn orthonormalize_pair(v1: &Vec4, v2: &Vec4) -> Option<(Vec4, Vec4)> {
    let n1 = norm4(v1);
    if n1 < 1e-12 {
        return None;
    }
    let u1 = scale4(v1, 1.0 / n1);
    let w = sub4(v2, &scale4(&u1, dot4(v2, &u1)));
    let n2 = norm4(&w);
    if n2 < 1e-12 {
        return None;
    }
    Some((u1, scale4(&w, 1.0 / n2)))
}

/// Extend an orthonormal pair to a positively oriented orthonormal basis of ℝ⁴.
pub fn extend_to_oriented_basis(u1: &Vec4, u2: &Vec4) -> [Vec4; 4] {
    let mut basis = vec![*u1, *u2];
    for k in 0..4 {
        let mut e = [0.0; 4];
        e[k] = 1.0;
        let mut w = e;
        for b in &basis {
            w = sub4(&w, &scale4(b, dot4(&w, b)));
        }
        if norm4(&w) > 1e-6 {
            basis.push(normalize4(&w));
            if basis.len() == 4 {
                break;
            }
        }
    }
    assert_eq!(basis.len(), 4, "orthonormal pair could not be extended");
    let mut out = [basis[0], basis[1], basis[2], basis[3]];
    if det4(&out[0], &out[1], &out[2], &out[3]) < 0.0 {
        out[3] = scale4(&out[3], -1.0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det4_identity_and_swap() {
        let e: [Vec4; 4] = [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ];
        assert_eq!(det4(&e[0], &e[1], &e[2], &e[3]), 1.0);
        assert_eq!(det4(&e[1], &e[0], &e[2], &e[3]), -1.0);
        // cyclic pair swap (0 2)(1 3) is even
        assert_eq!(det4(&e[2], &e[3], &e[0], &e[1]), 1.0);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Mat4::from_cols([
            [2.0, 1.0, 0.0, 0.5],
            [0.0, 1.0, 3.0, -1.0],
            [1.0, 0.0, 1.0, 0.0],
            [0.0, 2.0, 0.0, 1.0],
        ]);
        let inv = m.inverse().unwrap();
        let id = m.mul(&inv);
        for (j, col) in id.cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((x - want).abs() < 1e-12, "entry ({i},{j}) = {x}");
            }
        }
    }

    #[test]
    fn oriented_extension() {
        let (u1, u2) =
            orthonormalize_pair(&[1.0, 1.0, 0.0, 0.0], &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let b = extend_to_oriented_basis(&u1, &u2);
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot4(&b[i], &b[j]) - want).abs() < 1e-12);
            }
        }
        assert!(det4(&b[0], &b[1], &b[2], &b[3]) > 0.0);
    }
}

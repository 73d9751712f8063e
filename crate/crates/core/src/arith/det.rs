use super::poly::MultiPoly;

pub type Matrix3 = [[MultiPoly; 3]; 3];

/// Determinant of a 3×3 polynomial matrix by cofactor expansion along the
/// first row.
pub fn det3(mat: &Matrix3) -> MultiPoly {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &mat[r1][c1] * &mat[r2][c2] - &mat[r1][c2] * &mat[r2][c1]
    };
    let t0 = &mat[0][0] * &minor(1, 2, 1, 2);
    let t1 = &mat[0][1] * &minor(1, 2, 0, 2);
    let t2 = &mat[0][2] * &minor(1, 2, 0, 1);
    t0 - t1 + t2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::Variable;

    fn zero3() -> Matrix3 {
        std::array::from_fn(|_| std::array::from_fn(|_| MultiPoly::zero()))
    }

    #[test]
    fn identity_has_determinant_one() {
        let mut m = zero3();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = MultiPoly::one();
        }
        assert_eq!(det3(&m), MultiPoly::one());
    }

    #[test]
    fn diagonal_is_product() {
        let mut m = zero3();
        m[0][0] = MultiPoly::var(Variable::P);
        m[1][1] = MultiPoly::var(Variable::K);
        m[2][2] = MultiPoly::var(Variable::M);
        let expected =
            MultiPoly::var(Variable::P) * MultiPoly::var(Variable::K) * MultiPoly::var(Variable::M);
        assert_eq!(det3(&m), expected);
    }

    #[test]
    fn swapping_columns_negates() {
        let mut m = zero3();
        let vars = [
            Variable::A,
            Variable::B,
            Variable::Bp,
            Variable::Rho,
            Variable::P,
            Variable::K,
        ];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = MultiPoly::var(vars[(i + 2 * j) % vars.len()])
                    + MultiPoly::integer((i * 3 + j) as i64);
            }
        }
        let mut swapped = m.clone();
        for row in swapped.iter_mut() {
            row.swap(0, 2);
        }
        assert_eq!(det3(&swapped), -det3(&m));
    }
}

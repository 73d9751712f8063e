use std::collections::BTreeMap;

use super::ClassifyError;
use crate::arith::{Assignment, Matrix3, MultiPoly, Rational, Variable};

fn v(x: Variable) -> MultiPoly {
    MultiPoly::var(x)
}

fn n(k: i64) -> MultiPoly {
    MultiPoly::integer(k)
}

/// `A·f(p,k) + B·f(p,m+k) = C·f(m+p,k)` with
/// `A = a+p+k+b'm`, `B = −(a+k+bm)`, `C = p − mϱ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalEquation {
    pub lhs_coeff_fpk: MultiPoly,
    pub lhs_coeff_fpmk: MultiPoly,
    pub rhs_coeff_fmpk: MultiPoly,
}

pub fn build_functional_equation() -> FunctionalEquation {
    use Variable::*;
    FunctionalEquation {
        lhs_coeff_fpk: v(A) + v(P) + v(K) + v(Bp) * v(M),
        lhs_coeff_fpmk: -(v(A) + v(K) + v(B) * v(M)),
        rhs_coeff_fmpk: v(P) - v(M) * v(Rho),
    }
}

/// A concrete point `(a, b, b', ϱ, m, p, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationPoint {
    pub a: Rational,
    pub b: Rational,
    pub bp: Rational,
    pub rho: Rational,
    pub m: Rational,
    pub p: Rational,
    pub k: Rational,
}

impl EquationPoint {
    fn assignment(&self) -> Assignment {
        use Variable::*;
        Assignment::new()
            .with(A, self.a.clone())
            .with(B, self.b.clone())
            .with(Bp, self.bp.clone())
            .with(Rho, self.rho.clone())
            .with(M, self.m.clone())
            .with(P, self.p.clone())
            .with(K, self.k.clone())
    }
}

/// Values of the unknown `f(p, k)`.
pub trait FunctionTable {
    fn value(&self, p: &Rational, k: &Rational) -> Option<Rational>;
}

impl FunctionTable for BTreeMap<(Rational, Rational), Rational> {
    fn value(&self, p: &Rational, k: &Rational) -> Option<Rational> {
        self.get(&(p.clone(), k.clone())).cloned()
    }
}

/// `f ≡ c` on every argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantTable(pub Rational);

impl FunctionTable for ConstantTable {
    fn value(&self, _: &Rational, _: &Rational) -> Option<Rational> {
        Some(self.0.clone())
    }
}

/// LHS − RHS of the functional equation at `point`.
pub fn residual<T: FunctionTable + ?Sized>(
    eq: &FunctionalEquation,
    table: &T,
    point: &EquationPoint,
) -> Result<Rational, ClassifyError> {
    let lookup = |p: Rational, k: Rational| {
        table
            .value(&p, &k)
            .ok_or_else(|| ClassifyError::MissingTableEntry(format!("f({p}, {k})")))
    };
    let (m, p, k) = (&point.m, &point.p, &point.k);
    let f_pk = lookup(p.clone(), k.clone())?;
    let f_pmk = lookup(p.clone(), m + k)?;
    let f_mpk = lookup(m + p, k.clone())?;
    let sigma = point.assignment();
    let coeff = |poly: &MultiPoly| poly.eval(&sigma).expect("all equation variables bound");
    Ok(
        coeff(&eq.lhs_coeff_fpk) * f_pk + coeff(&eq.lhs_coeff_fpmk) * f_pmk
            - coeff(&eq.rhs_coeff_fmpk) * f_mpk,
    )
}

/// LHS − RHS for `f ≡ c` with `b' = b`, as a polynomial in `m, ϱ, c`.
///
/// This is `mϱc`; its negative `−mϱc` is the module-axiom residual at
/// `(L_m, Y_p)`.
pub fn constant_solution_residual() -> MultiPoly {
    let eq = build_functional_equation();
    let c = v(Variable::C);
    let total = (eq.lhs_coeff_fpk + eq.lhs_coeff_fpmk - eq.rhs_coeff_fmpk) * c;
    total.substitute(Variable::Bp, &v(Variable::B))
}

/// Whether `f ≡ c` solves the equation (with `b' = b`) for all `m, p, k`.
pub fn check_constant_solution(rho: &Rational, c: &Rational) -> bool {
    let sigma = Assignment::new()
        .with(Variable::Rho, rho.clone())
        .with(Variable::C, c.clone());
    constant_solution_residual().partial_eval(&sigma).is_zero()
}

/// The three relations obtained from the functional equation, one row per
/// relation, as a matrix acting on `(f(p,k+m), f(p,k), f(p,k−m))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem3 {
    pub matrix: Matrix3,
}

pub const COLUMNS: [&str; 3] = ["f(p,k+m)", "f(p,k)", "f(p,k-m)"];

pub fn build_linear_system() -> LinearSystem3 {
    use Variable::*;
    let (a, b, bp, rho, p, k, m) = (v(A), v(B), v(Bp), v(Rho), v(P), v(K), v(M));
    let ak = &a + &k;

    // rows below are written as (f(p,k−m), f(p,k), f(p,k+m))
    let r1 = [
        (&p - n(2) * &m * &rho) * (&ak - &m + &p + &bp * &m) * (&ak + &p + &bp * &m)
            - (&p - &m * &rho) * (&m + &p - &m * &rho) * (&ak - &m + &p + n(2) * &bp * &m),
        n(-2) * (&p - n(2) * &m * &rho) * (&ak - &m + &b * &m) * (&ak + &p + &bp * &m),
        (&p - n(2) * &m * &rho) * (&ak - &m + &b * &m) * (&ak + &b * &m)
            + (&p - &m * &rho) * (&m + &p - &m * &rho) * (&ak - &m + n(2) * &b * &m),
    ];
    let r2 = [
        (&ak + &m - n(2) * &b * &m) * (&p + &m * &rho) * (-&m + &p + &m * &rho)
            + (&p + n(2) * &m * &rho) * (&ak + &m - &b * &m) * (&ak - &b * &m),
        n(-2) * (&p + n(2) * &m * &rho) * (&ak + &m - &b * &m) * (&ak + &p - &bp * &m),
        (&p + n(2) * &m * &rho) * (&ak + &m + &p - &bp * &m) * (&ak + &p - &bp * &m)
            - (&p + &m * &rho) * (-&m + &p + &m * &rho) * (&ak + &m + &p - n(2) * &bp * &m),
    ];
    let r3 = [
        (&ak - &b * &m) * (&ak + &p - &m + &bp * &m),
        -((&ak + &p - &bp * &m) * (&ak + &p - &m + &bp * &m)
            - (&p + &m * &rho) * (-&m + &p - &m * &rho)
            + (&ak + &b * &m) * (&ak + &m - &b * &m)),
        (&ak + &b * &m) * (&ak + &p + &m - &bp * &m),
    ];
    let flip = |[x, y, z]: [MultiPoly; 3]| [z, y, x];
    LinearSystem3 {
        matrix: [flip(r1), flip(r2), flip(r3)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn equation_coefficients() {
        let eq = build_functional_equation();
        assert_eq!(eq.lhs_coeff_fpk, "a + p + k + bp*m".parse().unwrap());
        assert_eq!(eq.lhs_coeff_fpmk, "-(a + k + b*m)".parse().unwrap());
        assert_eq!(eq.rhs_coeff_fmpk, "p - m*rho".parse().unwrap());
        for c in [&eq.lhs_coeff_fpk, &eq.lhs_coeff_fpmk, &eq.rhs_coeff_fmpk] {
            for x in Variable::ALL {
                assert!(c.degree_in(x).unwrap_or(0) <= 1);
            }
        }
    }

    #[test]
    fn system_entries() {
        let sys = build_linear_system();
        let expected: MultiPoly = "-2*(p - 2*m*rho)*(a + k - m + b*m)*(a + k + p + bp*m)"
            .parse()
            .unwrap();
        assert_eq!(sys.matrix[0][1], expected);
        let expected: MultiPoly = "(a + k + b*m)*(a + k + p + m - bp*m)".parse().unwrap();
        assert_eq!(sys.matrix[2][0], expected);
        for row in &sys.matrix {
            for e in row {
                let vars = e.variables();
                assert!(!vars.contains(&Variable::N) && !vars.contains(&Variable::C));
            }
        }
    }

    /// The third relation evaluated straight from its printed products in
    /// machine integers.
    fn row3_by_hand(a: i64, b: i64, bp: i64, rho: i64, p: i64, k: i64, m: i64) -> [i64; 3] {
        let ak = a + k;
        [
            (ak + b * m) * (ak + p + m - bp * m),
            -((ak + p - bp * m) * (ak + p - m + bp * m) - (p + m * rho) * (-m + p - m * rho)
                + (ak + b * m) * (ak + m - b * m)),
            (ak - b * m) * (ak + p - m + bp * m),
        ]
    }

    #[test]
    fn row3_numeric() {
        let sys = build_linear_system();
        for (a, b, bp, rho, p, k, m) in [
            (0, 0, 0, 0, 1, 0, 1),
            (1, 2, 3, 5, 7, 11, 13),
            (-2, 1, 0, -3, 4, -1, 2),
        ] {
            let sigma = Assignment::new()
                .with(Variable::A, int(a))
                .with(Variable::B, int(b))
                .with(Variable::Bp, int(bp))
                .with(Variable::Rho, int(rho))
                .with(Variable::P, int(p))
                .with(Variable::K, int(k))
                .with(Variable::M, int(m));
            let got: Vec<Rational> = sys.matrix[2]
                .iter()
                .map(|e| e.eval(&sigma).unwrap())
                .collect();
            let want: Vec<Rational> = row3_by_hand(a, b, bp, rho, p, k, m)
                .iter()
                .map(|&x| int(x))
                .collect();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn constant_solutions_annihilate_rows() {
        // f ≡ const solves the equation exactly when b' = b − ϱ
        let sys = build_linear_system();
        let on_locus = v(Variable::B) - v(Variable::Rho);
        for row in &sys.matrix {
            let sum = &row[0] + &row[1] + &row[2];
            assert!(sum.substitute(Variable::Bp, &on_locus).is_zero());
            let at_zero = sum
                .substitute(Variable::Bp, &v(Variable::B))
                .partial_eval(&Assignment::new().with(Variable::Rho, int(0)));
            assert!(at_zero.is_zero());
        }
    }

    #[test]
    fn constant_solution_law() {
        assert_eq!(constant_solution_residual(), "m*rho*c".parse().unwrap());
        assert!(check_constant_solution(&int(0), &int(5)));
        assert!(!check_constant_solution(&int(1), &int(1)));
        assert!(check_constant_solution(&int(7), &int(0)));
        assert!(!check_constant_solution(&rat(-2, 3), &rat(1, 4)));
    }

    #[test]
    fn residual_examples() {
        let eq = build_functional_equation();
        let point = |rho: i64, m: i64| EquationPoint {
            a: rat(1, 3),
            b: int(2),
            bp: int(2),
            rho: int(rho),
            m: int(m),
            p: int(3),
            k: int(-1),
        };
        assert_eq!(
            residual(&eq, &ConstantTable(int(4)), &point(0, 2)).unwrap(),
            int(0)
        );
        assert_eq!(
            residual(&eq, &ConstantTable(int(1)), &point(1, 2)).unwrap(),
            int(2)
        );
        assert_eq!(
            residual(&eq, &ConstantTable(int(0)), &point(5, 3)).unwrap(),
            int(0)
        );

        let mut table = BTreeMap::new();
        table.insert((int(3), int(-1)), int(1));
        assert!(matches!(
            residual(&eq, &table, &point(0, 2)),
            Err(ClassifyError::MissingTableEntry(_))
        ));
        table.insert((int(3), int(1)), int(1));
        table.insert((int(5), int(-1)), int(1));
        assert_eq!(residual(&eq, &table, &point(0, 2)).unwrap(), int(0));
    }
}

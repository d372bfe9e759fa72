//! Seifert matrices: the two block families, validation of user input, and
//! the Alexander polynomial pipeline `det(tS - S^T)`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly, Unit};
use crate::polymatrix::{alexander_matrix, block_compose, IntMatrix, MatrixError, PolyMatrix};

#[derive(Debug, Error)]
pub enum SeifertError {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("family parameter n must be at least 1")]
    InvalidFamilyIndex,
    #[error("cannot parse Seifert matrix: {0}")]
    Parse(String),
    #[error("Seifert matrix has odd dimension {0}")]
    OddDimension(usize),
    #[error("det(S - S^T) = {0}, expected +1 or -1; not the Seifert matrix of a knot in a homology sphere")]
    NotUnimodularIntersection(BigInt),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Basis curve classes on the genus-`n` surface, ordered
/// `lambda_1..lambda_n, mu_1..mu_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Lambda,
    Mu,
}

/// Linking number of the push-off of `row_class_i` with `col_class_j` for
/// the `K_{n,m}` surface. Indices are 1-based.
pub fn linking_value(
    n: u32,
    row_class: Generator,
    i: u32,
    col_class: Generator,
    j: u32,
) -> Result<i64, SeifertError> {
    for idx in [i, j] {
        if idx < 1 || idx > n {
            return Err(SeifertError::IndexOutOfRange(format!(
                "generator index {idx} outside 1..={n}"
            )));
        }
    }
    use Generator::*;
    Ok(match (row_class, col_class) {
        (Lambda, Lambda) | (Mu, Mu) => 0,
        (Lambda, Mu) => {
            if i <= j {
                2
            } else {
                1
            }
        }
        (Mu, Lambda) => {
            if i <= j {
                1
            } else {
                2
            }
        }
    })
}

/// Which knot family a Seifert matrix belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    /// `K_{n,m}`
    C,
    /// `K'_{n,m}`
    E,
}

impl FamilyKind {
    /// Knot label with the given parameters, e.g. `K_{3,0}` or `K'_{3,0}`.
    pub fn label(&self, n: u32, m: i64) -> String {
        match self {
            FamilyKind::C => format!("K_{{{n},{m}}}"),
            FamilyKind::E => format!("K'_{{{n},{m}}}"),
        }
    }

    /// Entries of the upper-right block: value on and above the diagonal,
    /// value below it.
    fn upper_block(&self) -> (i64, i64) {
        match self {
            FamilyKind::C => (2, 1),
            FamilyKind::E => (-2, -3),
        }
    }

    fn lower_block(&self) -> (i64, i64) {
        match self {
            FamilyKind::C => (1, 2),
            FamilyKind::E => (-3, -2),
        }
    }

    /// Closed form of the symmetrized polynomial at `n = 1`; the general
    /// form is this with `t` replaced by `t^n`.
    pub fn template(&self) -> LaurentPoly {
        match self {
            FamilyKind::C => LaurentPoly::from_i64s(-1, &[2, -5, 2]),
            FamilyKind::E => LaurentPoly::from_i64s(-1, &[6, -13, 6]),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::C => "C",
            FamilyKind::E => "E",
        })
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "C" | "c" => Ok(FamilyKind::C),
            "E" | "e" => Ok(FamilyKind::E),
            other => Err(format!("unknown family {other:?}, expected C or E")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    kind: FamilyKind,
    n: u32,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: u32) -> Result<Self, SeifertError> {
        if n == 0 {
            return Err(SeifertError::InvalidFamilyIndex);
        }
        Ok(FamilySpec { kind, n })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The two off-diagonal blocks `(A_n, B_n)` (primed for kind E).
    pub fn blocks(&self) -> (IntMatrix, IntMatrix) {
        let n = self.n as usize;
        let tri = |(on_or_above, below): (i64, i64)| {
            IntMatrix::from_fn(n, |i, j| {
                BigInt::from(if j >= i { on_or_above } else { below })
            })
        };
        (tri(self.kind.upper_block()), tri(self.kind.lower_block()))
    }

    /// The symmetrized Alexander polynomial the family is known to have.
    pub fn expected_delta(&self) -> LaurentPoly {
        self.kind.template().substitute_power(self.n)
    }
}

/// Block Seifert matrix `[[O, A], [B, O]]` for the family.
pub fn build_family(spec: FamilySpec) -> SeifertMatrix {
    let (a, b) = spec.blocks();
    let o = IntMatrix::zeros(spec.n as usize);
    let entries = block_compose(&o, &a, &b, &o).expect("family blocks share a dimension");
    SeifertMatrix {
        genus: spec.n,
        entries,
    }
}

/// A validated `2g x 2g` Seifert matrix with `det(S - S^T) = ±1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    genus: u32,
    entries: IntMatrix,
}

impl SeifertMatrix {
    pub fn new(entries: IntMatrix) -> Result<Self, SeifertError> {
        let dim = entries.dim();
        if !dim.is_multiple_of(2) {
            return Err(SeifertError::OddDimension(dim));
        }
        let det = entries.sub(&entries.transpose()).det();
        if !det.abs().is_one() {
            return Err(SeifertError::NotUnimodularIntersection(det));
        }
        Ok(SeifertMatrix {
            genus: (dim / 2) as u32,
            entries,
        })
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, SeifertError> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    /// Genus of the surface the matrix was read from: half its dimension.
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.entries
    }

    /// `det(S - S^T)`, which is `±1` for every valid matrix.
    pub fn intersection_det(&self) -> BigInt {
        self.entries.sub(&self.entries.transpose()).det()
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "size": self.entries.dim(),
            "entries": self.entries.rows().iter().map(|r| {
                r.iter().map(|c| Value::Number(c.to_string().parse().expect("integer literal")))
                    .collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

/// Parses `{"size": N, "entries": [[...], ...]}` with integer entries.
pub fn parse_matrix(text: &str) -> Result<SeifertMatrix, SeifertError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| SeifertError::Parse(e.to_string()))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| SeifertError::Parse("expected a JSON object".into()))?;
    let size = obj
        .get("size")
        .and_then(Value::as_u64)
        .ok_or_else(|| SeifertError::Parse("missing or invalid `size`".into()))?
        as usize;
    let rows = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| SeifertError::Parse("missing `entries` array".into()))?;
    if size == 0 {
        return Err(SeifertError::Parse("`size` must be positive".into()));
    }
    if rows.len() != size {
        return Err(SeifertError::Parse(format!(
            "`size` is {size} but `entries` has {} rows",
            rows.len()
        )));
    }
    let mut parsed = Vec::with_capacity(size);
    for (r, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| SeifertError::Parse(format!("row {r} is not an array")))?;
        if row.len() != size {
            return Err(SeifertError::Parse(format!(
                "row {r} has {} entries, expected {size}",
                row.len()
            )));
        }
        let mut out = Vec::with_capacity(size);
        for (c, v) in row.iter().enumerate() {
            let lit = match v {
                Value::Number(num) => num.to_string(),
                _ => {
                    return Err(SeifertError::Parse(format!(
                        "entry ({r}, {c}) is not a number"
                    )))
                }
            };
            let value: BigInt = lit.parse().map_err(|_| {
                SeifertError::Parse(format!("entry ({r}, {c}) = {lit} is not an integer"))
            })?;
            out.push(value);
        }
        parsed.push(out);
    }
    SeifertMatrix::from_rows(&parsed)
}

pub fn load_matrix(path: impl AsRef<Path>) -> Result<SeifertMatrix, SeifertError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| SeifertError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_matrix(&text)
}

/// Alexander polynomial of a Seifert matrix in raw and symmetrized form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderResult {
    /// `det(tS - S^T)`.
    pub raw: LaurentPoly,
    /// `unit * raw`, symmetric with positive leading coefficient.
    pub symmetric: LaurentPoly,
    pub unit: Unit,
    /// Top degree of `symmetric`.
    pub d: i64,
    /// Genus of the surface the matrix came from; an upper bound on the
    /// knot genus.
    pub genus_upper: u32,
}

pub fn alexander(s: &SeifertMatrix) -> Result<AlexanderResult, SeifertError> {
    let raw = alexander_matrix(s.matrix()).det_bareiss();
    let (symmetric, unit) = raw.symmetrize()?;
    let d = symmetric.top_degree()?;
    Ok(AlexanderResult {
        raw,
        symmetric,
        unit,
        d,
        genus_upper: s.genus(),
    })
}

/// `t*A_n - B_n^T` for family C; its determinant is `alpha_n`.
pub fn alpha_matrix(n: u32) -> Result<PolyMatrix, SeifertError> {
    let (a, b) = FamilySpec::new(FamilyKind::C, n)?.blocks();
    Ok(PolyMatrix::from_fn(n as usize, |i, j| {
        LaurentPoly::linear(a.get(i, j).clone(), -b.get(j, i))
    }))
}

/// `A_n - t*B_n^T` for family C; its determinant is `(-1)^n (2 - t^n)`.
pub fn reciprocal_matrix(n: u32) -> Result<PolyMatrix, SeifertError> {
    let (a, b) = FamilySpec::new(FamilyKind::C, n)?.blocks();
    Ok(PolyMatrix::from_fn(n as usize, |i, j| {
        LaurentPoly::linear(-b.get(j, i), a.get(i, j).clone())
    }))
}

/// The `k x k` matrix whose determinant is `beta_k`: `alpha`'s matrix with
/// every entry of the first row set to `2t - 2`.
pub fn beta_matrix(k: u32) -> Result<PolyMatrix, SeifertError> {
    if k < 2 {
        return Err(SeifertError::IndexOutOfRange(format!(
            "beta needs k >= 2, got {k}"
        )));
    }
    let alpha = alpha_matrix(k)?;
    Ok(PolyMatrix::from_fn(k as usize, |i, j| {
        if i == 0 {
            LaurentPoly::linear(2, -2)
        } else {
            alpha.get(i, j).clone()
        }
    }))
}

/// `2t^n - 1`.
pub fn alpha_closed(n: u32) -> Result<LaurentPoly, SeifertError> {
    if n == 0 {
        return Err(SeifertError::IndexOutOfRange("alpha needs n >= 1".into()));
    }
    Ok(&LaurentPoly::monomial(2, n as i64) - &LaurentPoly::one())
}

/// `beta_k` by the row-reduction recurrence `beta_k = t * beta_{k-1}` from
/// `beta_2 = 2t(t - 1)`.
pub fn beta(k: u32) -> Result<LaurentPoly, SeifertError> {
    if k < 2 {
        return Err(SeifertError::IndexOutOfRange(format!(
            "beta needs k >= 2, got {k}"
        )));
    }
    let t = LaurentPoly::t();
    let mut acc = LaurentPoly::from_i64s(1, &[-2, 2]);
    for _ in 2..k {
        acc = &t * &acc;
    }
    Ok(acc)
}

/// `alpha_n` by first-row expansion: `alpha_k = alpha_{k-1} + t * beta_{k-1}`
/// for `k >= 3`, from `alpha_1 = 2t - 1` and `alpha_2 = 2t^2 - 1`.
pub fn alpha_recursive(n: u32) -> Result<LaurentPoly, SeifertError> {
    match n {
        0 => Err(SeifertError::IndexOutOfRange("alpha needs n >= 1".into())),
        1 => Ok(LaurentPoly::linear(2, -1)),
        _ => {
            let t = LaurentPoly::t();
            let mut acc = LaurentPoly::from_i64s(0, &[-1, 0, 2]);
            for k in 3..=n {
                acc = &acc + &(&t * &beta(k - 1)?);
            }
            Ok(acc)
        }
    }
}

/// `(-1)^n (2 - t^n)`.
pub fn reciprocal_factor(n: u32) -> Result<LaurentPoly, SeifertError> {
    if n == 0 {
        return Err(SeifertError::IndexOutOfRange("n must be >= 1".into()));
    }
    let base = &LaurentPoly::constant(2) - &LaurentPoly::monomial(1, n as i64);
    Ok(if n.is_multiple_of(2) { base } else { -base })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn family(kind: FamilyKind, n: u32) -> SeifertMatrix {
        build_family(FamilySpec::new(kind, n).unwrap())
    }

    #[test]
    fn linking_table() {
        use Generator::*;
        assert_eq!(linking_value(3, Lambda, 1, Lambda, 3).unwrap(), 0);
        assert_eq!(linking_value(3, Lambda, 2, Mu, 2).unwrap(), 2);
        assert_eq!(linking_value(3, Mu, 3, Lambda, 1).unwrap(), 2);
        assert_eq!(linking_value(3, Mu, 1, Mu, 2).unwrap(), 0);
        assert_eq!(linking_value(3, Lambda, 3, Mu, 1).unwrap(), 1);
        assert_eq!(linking_value(3, Mu, 1, Lambda, 3).unwrap(), 1);
        assert!(matches!(
            linking_value(3, Mu, 4, Lambda, 1),
            Err(SeifertError::IndexOutOfRange(_))
        ));
        assert!(linking_value(3, Mu, 1, Lambda, 0).is_err());
    }

    #[test]
    fn family_c_agrees_with_linking_table() {
        for n in 1..=6u32 {
            let s = family(FamilyKind::C, n);
            let class = |k: u32| {
                if k <= n {
                    (Generator::Lambda, k)
                } else {
                    (Generator::Mu, k - n)
                }
            };
            for r in 1..=2 * n {
                for c in 1..=2 * n {
                    let (rc, i) = class(r);
                    let (cc, j) = class(c);
                    let lk = linking_value(n, rc, i, cc, j).unwrap();
                    assert_eq!(
                        *s.matrix().get(r as usize - 1, c as usize - 1),
                        BigInt::from(lk)
                    );
                }
            }
        }
    }

    #[test]
    fn build_family_examples() {
        assert_eq!(
            family(FamilyKind::C, 1).matrix(),
            &IntMatrix::from_rows(&[vec![0, 2], vec![1, 0]]).unwrap()
        );
        assert_eq!(
            family(FamilyKind::E, 1).matrix(),
            &IntMatrix::from_rows(&[vec![0, -2], vec![-3, 0]]).unwrap()
        );
        assert_eq!(
            family(FamilyKind::C, 2).matrix(),
            &IntMatrix::from_rows(&[
                vec![0, 0, 2, 2],
                vec![0, 0, 1, 2],
                vec![1, 1, 0, 0],
                vec![2, 1, 0, 0],
            ])
            .unwrap()
        );
        assert!(matches!(
            FamilySpec::new(FamilyKind::C, 0),
            Err(SeifertError::InvalidFamilyIndex)
        ));
    }

    #[test]
    fn family_e_small_cases_against_cofactor() {
        // Hand-check of the E closed form before trusting the template.
        for n in 1..=2 {
            let s = family(FamilyKind::E, n);
            let raw = alexander_matrix(s.matrix()).det_cofactor().unwrap();
            let expected = FamilyKind::E.template().substitute_power(n);
            assert!(raw.doteq(&expected).is_some(), "n={n}: {raw}");
        }
        let raw = alexander_matrix(family(FamilyKind::E, 1).matrix())
            .det_cofactor()
            .unwrap();
        assert_eq!(raw, p("-6*t^2 + 13*t - 6"));
    }

    #[test]
    fn alexander_examples() {
        for n in 1..=4 {
            let r = alexander(&family(FamilyKind::C, n)).unwrap();
            assert_eq!(r.symmetric, FamilyKind::C.template().substitute_power(n));
            assert_eq!(r.d, n as i64);
            let r = alexander(&family(FamilyKind::E, n)).unwrap();
            assert_eq!(r.symmetric, FamilyKind::E.template().substitute_power(n));
            assert_eq!(r.d, n as i64);
        }
        let unknotish = SeifertMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        let r = alexander(&unknotish).unwrap();
        assert_eq!(r.raw, p("t"));
        assert!(r.symmetric.is_one());
        assert_eq!(r.d, 0);
        assert_eq!(r.unit, Unit::new(1, -1));
        assert_eq!(r.unit.apply(&r.raw), r.symmetric);
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(beta(2).unwrap(), p("2*t^2 - 2*t"));
        assert_eq!(alpha_closed(5).unwrap(), p("2*t^5 - 1"));
        assert_eq!(alpha_recursive(5).unwrap(), p("2*t^5 - 1"));
        assert_eq!(alpha_recursive(1).unwrap(), p("2*t - 1"));
        assert!(beta(1).is_err());
        assert!(alpha_closed(0).is_err());
        assert!(alpha_recursive(0).is_err());
    }

    #[test]
    fn beta_against_its_matrix() {
        for k in 2..=6 {
            let closed = &LaurentPoly::monomial(2, k as i64 - 1) * &p("t - 1");
            assert_eq!(beta(k).unwrap(), closed);
            assert_eq!(beta_matrix(k).unwrap().det_cofactor().unwrap(), closed);
        }
    }

    #[test]
    fn reciprocal_factor_examples() {
        assert_eq!(reciprocal_factor(1).unwrap(), p("t - 2"));
        assert_eq!(reciprocal_factor(2).unwrap(), p("2 - t^2"));
        assert_eq!(reciprocal_factor(3).unwrap(), p("t^3 - 2"));
        // The direct determinant is 2 - t^n; the closed form carries an
        // extra (-1)^n, invisible up to units.
        for n in 1..=5 {
            let det = reciprocal_matrix(n).unwrap().det_cofactor().unwrap();
            let two_minus = &LaurentPoly::constant(2) - &LaurentPoly::monomial(1, n as i64);
            assert_eq!(det, two_minus);
            let factor = reciprocal_factor(n).unwrap();
            let expected_sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(det.doteq(&factor), Some(Unit::new(expected_sign, 0)));
        }
    }

    #[test]
    fn parse_examples() {
        let s = parse_matrix(r#"{"size": 2, "entries": [[0,2],[1,0]]}"#).unwrap();
        assert_eq!(s.genus(), 1);
        assert_eq!(s, family(FamilyKind::C, 1));
        assert!(matches!(
            parse_matrix(r#"{"size": 2, "entries": [[0,1],[1,0]]}"#),
            Err(SeifertError::NotUnimodularIntersection(d)) if d == BigInt::from(0)
        ));
        assert!(matches!(
            parse_matrix(r#"{"size": 3, "entries": [[0,1,0],[0,0,0],[0,0,0]]}"#),
            Err(SeifertError::OddDimension(3))
        ));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        for bad in [
            "not json",
            "[]",
            r#"{"entries": [[0,2],[1,0]]}"#,
            r#"{"size": 2}"#,
            r#"{"size": 2, "entries": [[0,2.5],[1,0]]}"#,
            r#"{"size": 2, "entries": [[0,"2"],[1,0]]}"#,
            r#"{"size": 2, "entries": [[0,2],[1]]}"#,
            r#"{"size": 3, "entries": [[0,2],[1,0]]}"#,
            r#"{"size": 0, "entries": []}"#,
            r#"{"size": 2, "entries": [[0,2e0],[1,0]]}"#,
        ] {
            assert!(
                matches!(parse_matrix(bad), Err(SeifertError::Parse(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn parse_accepts_big_integers() {
        let big = "123456789012345678901234567890";
        let text = format!(r#"{{"size": 2, "entries": [[{big},1],[0,{big}]]}}"#);
        let s = parse_matrix(&text).unwrap();
        assert_eq!(s.matrix().get(0, 0).to_string(), big);
        assert_eq!(parse_matrix(&s.to_json().to_string()).unwrap(), s);
    }
}

//! Input schemas and handlers, one per subcommand.

use copra_core::codec::{
    encode_count, encode_element, encode_elements, encode_integer, encode_matrix, encode_presentation, field, object,
    parse_element, parse_elements, parse_integer, parse_presentation, parse_rows, ring_field,
};
use copra_core::{
    bound_witness, decompose, poly_gcd, primary_decompose_int, quasi_factorize, same_module, separable_decompose,
    smith_normal_form, solve_membership, AlgebraError, Element, InvariantFactorDecomposition, Matrix, Presentation,
    Ring,
};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::{CliError, Report, Subcommand};

type Result<T> = std::result::Result<T, CliError>;

/// A request whose input passed schema validation.
pub(crate) enum Parsed {
    Snf(Matrix),
    Kernel(Matrix),
    Solve(Matrix, Matrix),
    Decompose(Presentation),
    SameModule(Presentation, Presentation),
    Quasifactor(Ring, Vec<Element>),
    Polygcd(Ring, Element, Element),
    Separable(Ring, Vec<Element>),
    Primary(Ring, BigInt),
    Bound(Ring, Element),
}

fn schema_error(msg: String) -> CliError {
    CliError::Algebra(AlgebraError::Parse(msg))
}

/// Rejects keys outside `required` and `optional`, and requires every key in
/// `required`.
fn keys<'a>(value: &'a Value, required: &[&str], optional: &[&str]) -> Result<&'a Map<String, Value>> {
    let obj = object(value)?;
    if let Some(k) = obj
        .keys()
        .find(|k| !required.contains(&k.as_str()) && !optional.contains(&k.as_str()))
    {
        return Err(schema_error(format!("unexpected field {k:?}")));
    }
    for k in required {
        field(obj, k)?;
    }
    Ok(obj)
}

fn matrix(value: &Value, extra: &[&str]) -> Result<Matrix> {
    let mut required = vec!["ring", "rows"];
    required.extend_from_slice(extra);
    let obj = keys(value, &required, &["cols"])?;
    let ring = ring_field(obj)?;
    let cols = match obj.get("cols") {
        None => None,
        Some(_) => Some(copra_core::codec::count_field(obj, "cols")?),
    };
    Ok(parse_rows(&ring, field(obj, "rows")?, cols)?)
}

fn presentation(value: &Value) -> Result<Presentation> {
    let obj = keys(value, &["ring", "generators"], &["relations"])?;
    if let Some(rel) = obj.get("relations") {
        keys(rel, &["ring", "rows"], &["cols"])?;
    }
    Ok(parse_presentation(value)?)
}

pub(crate) fn parse(subcommand: Subcommand, value: &Value) -> Result<Parsed> {
    Ok(match subcommand {
        Subcommand::Snf => Parsed::Snf(matrix(value, &[])?),
        Subcommand::Kernel => Parsed::Kernel(matrix(value, &[])?),
        Subcommand::Solve => {
            let a = matrix(value, &["rhs"])?;
            let rhs = parse_elements(a.ring(), &value["rhs"])?;
            if rhs.len() != a.rows() {
                return Err(schema_error(format!(
                    "\"rhs\" has {} entries for a matrix with {} rows",
                    rhs.len(),
                    a.rows()
                )));
            }
            let b = Matrix::column_vector(a.ring().clone(), rhs)?;
            Parsed::Solve(a, b)
        }
        Subcommand::Decompose => Parsed::Decompose(presentation(value)?),
        Subcommand::SameModule => {
            let obj = keys(value, &["left", "right"], &[])?;
            Parsed::SameModule(presentation(&obj["left"])?, presentation(&obj["right"])?)
        }
        Subcommand::Quasifactor => {
            let obj = keys(value, &["ring", "elements"], &[])?;
            let ring = ring_field(obj)?;
            let xs = parse_elements(&ring, &obj["elements"])?;
            Parsed::Quasifactor(ring, xs)
        }
        Subcommand::Polygcd => {
            let obj = keys(value, &["ring", "f", "g"], &[])?;
            let ring = ring_field(obj)?;
            let f = parse_element(&ring, &obj["f"])?;
            let g = parse_element(&ring, &obj["g"])?;
            Parsed::Polygcd(ring, f, g)
        }
        Subcommand::Separable => {
            let obj = keys(value, &["ring", "polys"], &[])?;
            let ring = ring_field(obj)?;
            let polys = parse_elements(&ring, &obj["polys"])?;
            Parsed::Separable(ring, polys)
        }
        Subcommand::Primary => {
            let obj = keys(value, &["ring", "n"], &[])?;
            Parsed::Primary(ring_field(obj)?, parse_integer(&obj["n"])?)
        }
        Subcommand::Bound => {
            let obj = keys(value, &["ring", "element"], &[])?;
            let ring = ring_field(obj)?;
            let a = parse_element(&ring, &obj["element"])?;
            Parsed::Bound(ring, a)
        }
    })
}

pub(crate) fn execute(parsed: Parsed, verify: bool) -> Result<Report> {
    let mut report = match parsed {
        Parsed::Snf(a) => snf(&a)?,
        Parsed::Kernel(a) => kernel(&a)?,
        Parsed::Solve(a, b) => solve(&a, &b)?,
        Parsed::Decompose(p) => decomposition(&p)?,
        Parsed::SameModule(p1, p2) => compare(&p1, &p2)?,
        Parsed::Quasifactor(ring, xs) => quasifactor(&ring, &xs)?,
        Parsed::Polygcd(ring, f, g) => polygcd(&ring, &f, &g)?,
        Parsed::Separable(ring, polys) => separable(&ring, &polys)?,
        Parsed::Primary(ring, n) => primary(&ring, &n)?,
        Parsed::Bound(ring, a) => bound(&ring, &a)?,
    };
    if !verify {
        report.checks.clear();
    }
    Ok(report)
}

fn show_all(ring: &Ring, xs: &[Element]) -> String {
    xs.iter().map(|x| ring.display(x)).collect::<Vec<_>>().join(", ")
}

fn show_matrix(name: &str, m: &Matrix) -> Vec<String> {
    let mut lines = vec![format!("{name} ({}x{}) =", m.rows(), m.cols())];
    lines.extend(m.to_string().lines().map(|l| format!("  {l}")));
    lines
}

fn snf(a: &Matrix) -> Result<Report> {
    let s = smith_normal_form(a)?;
    let check = s.check(a)?;
    let ring = a.ring();
    let diagonal = s.diagonal();
    let mut plain = vec![
        format!("diagonal: [{}]", show_all(ring, &diagonal)),
        format!("rank: {}", s.rank()),
    ];
    for (name, m) in [
        ("D", &s.d),
        ("U", &s.u),
        ("U^-1", &s.u_inv),
        ("V", &s.v),
        ("V^-1", &s.v_inv),
    ] {
        plain.extend(show_matrix(name, m));
    }
    Ok(Report {
        ring: ring.to_string(),
        result: json!({
            "d": encode_matrix(&s.d),
            "diagonal": encode_elements(ring, &diagonal),
            "rank": s.rank(),
            "u": encode_matrix(&s.u),
            "u_inv": encode_matrix(&s.u_inv),
            "v": encode_matrix(&s.v),
            "v_inv": encode_matrix(&s.v_inv),
        }),
        plain,
        checks: vec![
            ("product", check.product),
            ("u_inverse", check.u_inverse),
            ("v_inverse", check.v_inverse),
            ("diagonal", check.diagonal),
            ("divisibility_chain", check.divisibility_chain),
            ("canonical", check.canonical),
        ],
    })
}

fn kernel(a: &Matrix) -> Result<Report> {
    let k = copra_core::kernel(a)?;
    let s = smith_normal_form(a)?;
    let rank = s.rank();
    let mut plain = vec![format!("rank: {rank}")];
    plain.extend(show_matrix("kernel", &k));
    Ok(Report {
        ring: a.ring().to_string(),
        result: json!({ "kernel": encode_matrix(&k), "rank": rank }),
        plain,
        checks: vec![
            ("annihilates", a.mul(&k)?.is_zero()),
            ("columns", k.cols() + rank == a.cols()),
            ("smith_certificate", s.check(a)?.all()),
        ],
    })
}

fn solve(a: &Matrix, b: &Matrix) -> Result<Report> {
    let ring = a.ring();
    let x = solve_membership(a, b)?;
    let s = smith_normal_form(a)?;
    let mut checks = vec![("smith_certificate", s.check(a)?.all())];
    let (solution, plain) = match &x {
        Some(x) => {
            checks.push(("residual", a.mul(x)? == *b));
            let xs = x.column(0);
            (
                encode_elements(ring, &xs),
                vec![format!("solution: [{}]", show_all(ring, &xs))],
            )
        }
        None => {
            // D·y = U·b has no solution: some entry is not divisible by its
            // diagonal entry, or is nonzero below the rank.
            let c = s.u.mul(b)?;
            let diag = s.diagonal();
            let obstruction = (0..a.rows()).any(|i| match diag.get(i) {
                Some(d) if !ring.is_zero(d) => ring.divides(d, c.get(i, 0)).is_none(),
                _ => !ring.is_zero(c.get(i, 0)),
            });
            checks.push(("obstruction", obstruction));
            (Value::Null, vec!["no solution".to_string()])
        }
    };
    Ok(Report {
        ring: ring.to_string(),
        result: json!({ "solvable": x.is_some(), "solution": solution }),
        plain,
        checks,
    })
}

fn encode_decomposition(ring: &Ring, d: &InvariantFactorDecomposition) -> Value {
    json!({ "torsion": encode_elements(ring, &d.torsion), "free_rank": d.free_rank })
}

fn show_decomposition(ring: &Ring, d: &InvariantFactorDecomposition) -> String {
    let mut parts: Vec<String> = d.torsion.iter().map(|t| format!("R/({})", ring.display(t))).collect();
    if d.free_rank > 0 || parts.is_empty() {
        parts.push(format!("R^{}", d.free_rank));
    }
    parts.join(" + ")
}

/// Presentation of the decomposed module: one cyclic relation per torsion
/// factor, then the free generators.
fn canonical_presentation(ring: &Ring, d: &InvariantFactorDecomposition) -> Result<Presentation> {
    let torsion = Presentation::cyclic_sum(ring.clone(), &d.torsion)?;
    Ok(copra_core::direct_sum(
        &torsion,
        &Presentation::free(ring.clone(), d.free_rank),
    )?)
}

fn decomposition(p: &Presentation) -> Result<Report> {
    let ring = p.ring();
    let d = decompose(p)?;
    let canonical = canonical_presentation(ring, &d)?;
    let mut result = encode_decomposition(ring, &d);
    result["presentation"] = encode_presentation(&canonical);
    Ok(Report {
        ring: ring.to_string(),
        result,
        plain: vec![
            format!("torsion: [{}]", show_all(ring, &d.torsion)),
            format!("free rank: {}", d.free_rank),
            format!("module: {}", show_decomposition(ring, &d)),
        ],
        checks: vec![
            ("invariant_factors", d.is_valid(ring)),
            (
                "smith_certificate",
                smith_normal_form(p.relations())?.check(p.relations())?.all(),
            ),
            ("canonical_presentation", decompose(&canonical)? == d),
        ],
    })
}

fn compare(p1: &Presentation, p2: &Presentation) -> Result<Report> {
    let same = same_module(p1, p2)?;
    let ring = p1.ring();
    let (d1, d2) = (decompose(p1)?, decompose(p2)?);
    let certified =
        |p: &Presentation| -> Result<bool> { Ok(smith_normal_form(p.relations())?.check(p.relations())?.all()) };
    Ok(Report {
        ring: ring.to_string(),
        result: json!({
            "left": encode_decomposition(ring, &d1),
            "right": encode_decomposition(ring, &d2),
            "same": same,
        }),
        plain: vec![
            format!("left: {}", show_decomposition(ring, &d1)),
            format!("right: {}", show_decomposition(ring, &d2)),
            format!("same: {same}"),
        ],
        checks: vec![
            ("invariant_factors", d1.is_valid(ring) && d2.is_valid(ring)),
            ("smith_certificates", certified(p1)? && certified(p2)?),
            ("comparison", same == (d1 == d2)),
        ],
    })
}

fn encode_exponents(exponents: &[Vec<u64>]) -> Value {
    Value::Array(
        exponents
            .iter()
            .map(|row| Value::Array(row.iter().map(|&e| encode_count(e)).collect()))
            .collect(),
    )
}

fn show_product(ring: &Ring, unit: &Element, bases: &[Element], exps: &[u64]) -> String {
    let used: Vec<(String, u64)> = bases
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(b, &e)| (ring.display(b), e))
        .collect();
    let show_unit = !ring.is_one(unit) || used.is_empty();
    let alone = used.len() == 1 && !show_unit;
    let mut factors: Vec<String> = used
        .into_iter()
        .map(|(b, e)| {
            let b = if b.contains(' ') && !(alone && e == 1) {
                format!("({b})")
            } else {
                b
            };
            if e == 1 {
                b
            } else {
                format!("{b}^{e}")
            }
        })
        .collect();
    if show_unit {
        factors.insert(0, ring.display(unit));
    }
    factors.join(" * ")
}

fn quasifactor(ring: &Ring, xs: &[Element]) -> Result<Report> {
    let b = quasi_factorize(ring, xs)?;
    let check = b.check(ring, xs)?;
    let mut plain = vec![format!("basis: [{}]", show_all(ring, &b.basis))];
    for (i, x) in xs.iter().enumerate() {
        plain.push(format!(
            "{} = {}",
            ring.display(x),
            show_product(ring, &b.units[i], &b.basis, &b.exponents[i])
        ));
    }
    Ok(Report {
        ring: ring.to_string(),
        result: json!({
            "basis": encode_elements(ring, &b.basis),
            "exponents": encode_exponents(&b.exponents),
            "units": encode_elements(ring, &b.units),
        }),
        plain,
        checks: vec![
            ("pairwise_coprime", check.pairwise_coprime),
            ("nonunit_canonical_basis", check.nonunit_canonical_basis),
            ("units_invertible", check.units_invertible),
            ("reconstruction", check.reconstruction),
            ("maximal_exponents", check.maximal_exponents),
        ],
    })
}

fn polygcd(ring: &Ring, f: &Element, g: &Element) -> Result<Report> {
    let d = poly_gcd(ring, f, g)?;
    let cofactors_coprime = if ring.is_zero(&d) {
        ring.is_zero(f) && ring.is_zero(g)
    } else {
        match (ring.divides(&d, f), ring.divides(&d, g)) {
            (Some(a), Some(b)) => ring.is_one(&poly_gcd(ring, &a, &b)?),
            _ => false,
        }
    };
    Ok(Report {
        ring: ring.to_string(),
        result: json!({ "gcd": encode_element(ring, &d) }),
        plain: vec![format!("gcd: {}", ring.display(&d))],
        checks: vec![
            ("divides_f", ring.divides(&d, f).is_some()),
            ("divides_g", ring.divides(&d, g).is_some()),
            ("canonical", ring.normalize(&d) == d),
            ("cofactors_coprime", cofactors_coprime),
        ],
    })
}

fn separable(ring: &Ring, polys: &[Element]) -> Result<Report> {
    let s = separable_decompose(ring, polys)?;
    let check = s.check(ring, polys)?;
    let parts: Vec<Value> = s
        .parts
        .iter()
        .map(|p| {
            json!({
                "core": encode_element(ring, &p.core),
                "q": encode_count(p.q),
                "stored": encode_element(ring, &p.stored),
            })
        })
        .collect();
    let witnesses: Vec<Value> = s
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "first": w.first,
                "second": w.second,
                "u": encode_element(ring, &w.u),
                "v": encode_element(ring, &w.v),
            })
        })
        .collect();
    let mut plain: Vec<String> = s
        .parts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            format!(
                "part {i}: core {}, q = {}, stored {}",
                ring.display(&p.core),
                p.q,
                ring.display(&p.stored)
            )
        })
        .collect();
    let stored: Vec<Element> = s.parts.iter().map(|p| p.stored.clone()).collect();
    for (x, e) in polys.iter().zip(&s.exponents) {
        plain.push(format!(
            "{} = {}",
            ring.display(x),
            show_product(ring, &ring.one(), &stored, e)
        ));
    }
    for w in &s.witnesses {
        plain.push(format!(
            "({}) * part {} + ({}) * part {} = 1",
            ring.display(&w.u),
            w.first,
            ring.display(&w.v),
            w.second
        ));
    }
    Ok(Report {
        ring: ring.to_string(),
        result: json!({
            "exponents": encode_exponents(&s.exponents),
            "parts": parts,
            "witnesses": witnesses,
        }),
        plain,
        checks: vec![
            ("separable_parts", check.separable_parts),
            ("q_powers", check.q_powers),
            ("strongly_coprime", check.strongly_coprime),
            ("reconstruction", check.reconstruction),
        ],
    })
}

fn primary(ring: &Ring, n: &BigInt) -> Result<Report> {
    if *ring != Ring::Integers {
        return Err(
            AlgebraError::UnsupportedRing(format!("primary decomposition is implemented over ZZ, not {ring}")).into(),
        );
    }
    let d = primary_decompose_int(n)?;
    let check = d.check(n)?;
    let components: Vec<Value> = d
        .components
        .iter()
        .map(|c| json!({ "primary": encode_integer(&c.primary), "radical": encode_integer(&c.radical) }))
        .collect();
    let plain = if d.components.is_empty() {
        vec!["unit ideal: no components".to_string()]
    } else {
        d.components
            .iter()
            .map(|c| format!("({}) with radical ({})", c.primary, c.radical))
            .collect()
    };
    Ok(Report {
        ring: ring.to_string(),
        result: json!({ "components": components }),
        plain,
        checks: vec![
            ("product", check.product),
            ("primary_components", check.primary_components),
            ("distinct_radicals", check.distinct_radicals),
            ("radical", check.radical),
        ],
    })
}

/// Whether `bound` really bounds the number of nonunit factors of `a`,
/// judged by the size measure that every nonunit factor must consume.
fn bound_is_sound(ring: &Ring, a: &Element, bound: u64) -> Result<bool> {
    Ok(match (ring, a) {
        (Ring::Integers, Element::Int(n)) => n.bits() <= bound + 1,
        (Ring::Rationals | Ring::PrimeField(_), _) => true,
        (Ring::Poly(base), Element::Poly(c)) => {
            let degree = c.len() as u64 - 1;
            if base.is_field() {
                degree <= bound
            } else {
                let content = c.iter().try_fold(base.zero(), |acc, x| base.gcd(&acc, x))?;
                degree <= bound && bound_is_sound(base, &content, bound - degree)?
            }
        }
        _ => false,
    })
}

fn bound(ring: &Ring, a: &Element) -> Result<Report> {
    let n = bound_witness(ring, a)?;
    Ok(Report {
        ring: ring.to_string(),
        result: json!({ "bound": encode_count(n) }),
        plain: vec![format!("{} is bounded by {n}", ring.display(a))],
        checks: vec![("sound", bound_is_sound(ring, a, n)?)],
    })
}

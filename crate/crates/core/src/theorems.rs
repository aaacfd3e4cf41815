//! Verification suites. Each suite recomputes an identity on a concrete
//! algebra and records the outcome together with exact witness data.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::{is_algebraic_integer, is_nonneg_integer, CycScalar, Field, Rational};
use crate::characters::{central_decomposition, f_map, f_matrix, is_central_character, CharacterTable, FusionRing};
use crate::error::{Error, Result};
use crate::hopf::{
    hit_act_alg_on_dual, hit_act_dual_on_alg, pair, scale, sub, unit_vector, AxiomReport, DualVector, HopfData,
};
use crate::integrals::IntegralPair;
use crate::linalg::{coordinates_in, kernel_basis, rank_of, same_span, Matrix};
use crate::pipeline::Analysis;
use crate::wedderburn::{center, BlockDecomposition};

/// Number of random subsets tried by the corollary suite when there are too
/// many dual blocks to enumerate.
pub const SUBSET_SAMPLE: usize = 64;
/// Largest number of dual blocks for which every subset is tried.
pub const SUBSET_EXHAUSTIVE: usize = 8;

const EXPLORATORY: &str = "exploratory: ";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportItem {
    pub id: String,
    pub statement: String,
    pub pass: bool,
    pub witness: Value,
}

impl ReportItem {
    fn new(id: impl Into<String>, statement: impl Into<String>, pass: bool, witness: Value) -> ReportItem {
        ReportItem { id: id.into(), statement: statement.into(), pass, witness }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    /// Exploratory suites never affect the overall outcome.
    #[serde(skip)]
    pub exploratory: bool,
    pub items: Vec<ReportItem>,
}

impl SuiteReport {
    fn new(suite: Suite, items: Vec<ReportItem>) -> SuiteReport {
        SuiteReport { name: suite.name().to_string(), exploratory: suite == Suite::CentralFusion, items }
    }

    pub fn passed(&self) -> bool {
        self.exploratory || self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn item(&self, id: &str) -> Option<&ReportItem> {
        self.items.iter().find(|i| i.id == id)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub algebra: String,
    pub dim: usize,
    pub suites: Vec<SuiteReport>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new(h: &HopfData, suites: Vec<SuiteReport>) -> VerificationReport {
        let overall = suites.iter().all(SuiteReport::passed);
        VerificationReport { algebra: h.name().to_string(), dim: h.dim(), suites, overall }
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Axioms,
    Integrals,
    Lemma1,
    Corollary,
    Proposition,
    Section4,
    Kaplansky,
    CentralFusion,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Axioms,
        Suite::Integrals,
        Suite::Lemma1,
        Suite::Corollary,
        Suite::Proposition,
        Suite::Section4,
        Suite::Kaplansky,
        Suite::CentralFusion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Integrals => "integrals",
            Suite::Lemma1 => "lemma1",
            Suite::Corollary => "corollary",
            Suite::Proposition => "proposition",
            Suite::Section4 => "section4",
            Suite::Kaplansky => "kaplansky",
            Suite::CentralFusion => "central-fusion",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite `{s}`")))
    }
}

fn strings(v: &[CycScalar]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

fn ratio(num: usize, den: usize) -> CycScalar {
    CycScalar::rational(Rational::new(BigInt::from(num), BigInt::from(den)))
}

fn certificate(c: &CycScalar) -> (bool, Value) {
    let cert = is_algebraic_integer(c);
    let ok = cert.is_integer && cert.replay();
    (ok, serde_json::to_value(cert.summary()).expect("summary serializes"))
}

/// `χ_V(h) = tr(L_{h e_V}) / dim V`, the trace of `h` on `V` read off the
/// regular module `H e_V ≅ V^{dim V}`.
pub fn trace_character(h: &HopfData, idempotent: &[CycScalar], degree: usize) -> DualVector {
    let d = h.dim();
    let inv = ratio(1, degree);
    DualVector::new((0..d).map(|j| h.left_trace(&h.multiply(&unit_vector(d, j), idempotent)).times(&inv)).collect())
}

pub fn axioms_suite(report: &AxiomReport) -> SuiteReport {
    let items = report
        .checks
        .iter()
        .map(|c| {
            let witness = match &c.witness {
                Some(w) => json!({ "counterexample": w }),
                None => Value::Null,
            };
            ReportItem::new(c.name, c.statement, c.passed, witness)
        })
        .collect();
    SuiteReport::new(Suite::Axioms, items)
}

pub fn integrals_suite(h: &HopfData, ip: &IntegralPair) -> SuiteReport {
    let lambda = strings(&ip.dual_integral.coords);
    let big = strings(&ip.integral);
    let items = ip
        .checks(h)
        .into_iter()
        .map(|c| {
            let witness = match c.id {
                "lambda-unit" => json!({ "value": pair(&ip.dual_integral, h.unit()).to_string(), "lambda": lambda }),
                "lambda-Lambda" => json!({ "value": pair(&ip.dual_integral, &ip.integral).to_string() }),
                "counit-Lambda" => json!({ "value": h.counit_of(&ip.integral).to_string(), "dim": h.dim() }),
                "left-integral" | "two-sided" => json!({ "Lambda": big }),
                _ => json!({ "lambda": lambda }),
            };
            ReportItem::new(c.id, c.statement, c.pass, witness)
        })
        .collect();
    SuiteReport::new(Suite::Integrals, items)
}

/// Both formulas of the lemma relating `e_V`, `χ_V` and the integrals.
/// Item B compares against the trace character, computed independently of
/// the table.
pub fn verify_lemma1(
    h: &HopfData,
    blocks: &BlockDecomposition,
    integrals: &IntegralPair,
    table: &CharacterTable,
) -> SuiteReport {
    let d = h.dim();
    let mut items = Vec::new();
    for (b, chi) in blocks.blocks.iter().zip(&table.characters) {
        let factor = ratio(d, b.degree);
        let lhs = scale(&b.idempotent, &factor);
        let rhs = hit_act_dual_on_alg(&h.dual_antipode(chi), &integrals.integral, h);
        let difference = sub(&lhs, &rhs);
        let pass = difference.iter().all(Field::is_zero);
        items.push(ReportItem::new(
            format!("A-{}", b.label),
            "(dim H / dim V) e_V = (S*χ_V) ⇀ Λ",
            pass,
            json!({
                "block": b.label,
                "degree": b.degree,
                "factor": factor.to_string(),
                "lhs": strings(&lhs),
                "rhs": strings(&rhs),
                "difference": strings(&difference),
            }),
        ));

        let lhs = hit_act_alg_on_dual(&b.idempotent, &integrals.dual_integral, h).scale(&factor);
        let traced = trace_character(h, &b.idempotent, b.degree);
        let difference = lhs.sub(&traced);
        let pass = difference.is_zero() && traced == *chi;
        items.push(ReportItem::new(
            format!("B-{}", b.label),
            "(dim H / dim V)(e_V ⇀ λ) = χ_V, with χ_V(h) = tr(L_{h e_V}) / dim V",
            pass,
            json!({
                "block": b.label,
                "lhs": strings(&lhs.coords),
                "trace_character": strings(&traced.coords),
                "difference": strings(&difference.coords),
            }),
        ));
    }
    SuiteReport::new(Suite::Lemma1, items)
}

fn subsets(n: usize, seed: u64) -> (bool, Vec<Vec<bool>>) {
    if n <= SUBSET_EXHAUSTIVE {
        let all = (1u32..(1 << n)).map(|mask| (0..n).map(|i| mask & (1 << i) != 0).collect()).collect();
        return (false, all);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Vec<bool>> = Vec::with_capacity(SUBSET_SAMPLE);
    while out.len() < SUBSET_SAMPLE {
        let s: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        if s.iter().any(|&x| x) && !out.contains(&s) {
            out.push(s);
        }
    }
    (true, out)
}

fn nonneg_integers(v: &[CycScalar]) -> bool {
    v.iter().all(|c| c.to_rational().is_some_and(|q| is_nonneg_integer(&q)))
}

/// `δ_M Λ = (dim M) χ_M` for every primitive central idempotent of `H*`, and
/// non-negative integral character coordinates for sums of them.
pub fn verify_corollary(
    h: &HopfData,
    dual_blocks: &BlockDecomposition,
    integrals: &IntegralPair,
    dual_table: &CharacterTable,
    seed: u64,
) -> SuiteReport {
    let mut items = Vec::new();
    let deltas: Vec<DualVector> = dual_blocks.blocks.iter().map(|m| DualVector::new(m.idempotent.clone())).collect();
    let basis = dual_table.vectors();
    for ((m, delta), chi) in dual_blocks.blocks.iter().zip(&deltas).zip(&basis) {
        let lhs = hit_act_dual_on_alg(delta, &integrals.integral, h);
        let rhs = scale(chi, &CycScalar::from_int(m.degree as i64));
        items.push(ReportItem::new(
            format!("primitive-{}", m.label),
            "δ_M Λ = (dim M) χ_M",
            lhs == rhs,
            json!({ "block": m.label, "degree": m.degree, "lhs": strings(&lhs), "rhs": strings(&rhs) }),
        ));
    }

    let n = deltas.len();
    let degrees: Vec<CycScalar> = dual_blocks.blocks.iter().map(|m| CycScalar::from_int(m.degree as i64)).collect();
    let unit = deltas.iter().fold(DualVector::zero(h.dim()), |acc, x| acc.add(x));
    let image = hit_act_dual_on_alg(&unit, &integrals.integral, h);
    let coords = coordinates_in(&basis, &image);
    let pass = image == integrals.integral && coords.as_ref() == Some(&degrees);
    items.push(ReportItem::new(
        "unit",
        "δ = ε gives δΛ = Λ with coordinates (dim M)_M",
        pass,
        json!({ "coordinates": coords.as_deref().map(strings), "multiplicities": strings(&degrees) }),
    ));

    let (sampled, tests) = subsets(n, seed);
    let mut all_pass = true;
    let mut records = Vec::with_capacity(tests.len());
    for members in &tests {
        let delta = deltas
            .iter()
            .zip(members)
            .filter(|(_, &inside)| inside)
            .fold(DualVector::zero(h.dim()), |acc, (x, _)| acc.add(x));
        let image = hit_act_dual_on_alg(&delta, &integrals.integral, h);
        let multiplicities: Vec<CycScalar> = degrees
            .iter()
            .zip(members)
            .map(|(g, &inside)| if inside { g.clone() } else { CycScalar::from_int(0) })
            .collect();
        let coords = coordinates_in(&basis, &image);
        let ok = coords.as_ref().is_some_and(|c| nonneg_integers(c) && *c == multiplicities);
        all_pass &= ok;
        let labels: Vec<&str> =
            dual_blocks.labels().into_iter().zip(members).filter(|(_, &x)| x).map(|(l, _)| l).collect();
        records.push(json!({
            "members": labels,
            "coordinates": coords.as_deref().map(strings),
            "multiplicities": strings(&multiplicities),
            "pass": ok,
        }));
    }
    items.push(ReportItem::new(
        "subsets",
        "for δ = Σ_{M∈T} δ_M, δΛ has non-negative integer coordinates (dim M)_{M∈T} in the H*-character basis",
        all_pass,
        json!({ "sampled": sampled, "seed": seed, "count": tests.len(), "subsets": records }),
    ));
    SuiteReport::new(Suite::Corollary, items)
}

/// Divisibility and integrality for every block whose character is central
/// in `H*`; other blocks appear as skipped items.
pub fn verify_proposition(
    h: &HopfData,
    table: &CharacterTable,
    dual_blocks: &BlockDecomposition,
    dual_table: &CharacterTable,
    integrals: &IntegralPair,
) -> SuiteReport {
    let d = h.dim();
    let mut items = Vec::new();
    let dual_labels = dual_blocks.labels();
    for (v, chi) in table.characters.iter().enumerate() {
        let label = &table.labels[v];
        let degree = table.degrees[v];
        if !is_central_character(chi, h) {
            items.push(ReportItem::new(
                format!("skipped-{label}"),
                "hypothesis χ_V ∈ Z(H*) not satisfied; skipped",
                true,
                json!({ "skipped": true, "reason": format!("χ_{label} does not commute with H* under convolution") }),
            ));
            continue;
        }
        items.push(ReportItem::new(
            format!("divides-{label}"),
            "dim V divides dim H",
            d.is_multiple_of(degree),
            json!({ "dim_V": degree, "dim_H": d, "quotient": ratio(d, degree).to_string() }),
        ));

        let zeta = h.dual_antipode(chi);
        let (pass, witness, values) = match central_decomposition(&zeta, dual_blocks) {
            Ok(values) => {
                let mut pass = true;
                let mut certs = Vec::with_capacity(values.len());
                for (f, m) in values.iter().zip(&dual_labels) {
                    let (ok, cert) = certificate(f);
                    pass &= ok;
                    certs.push(json!({ "block": m, "certificate": cert }));
                }
                (pass, json!({ "coefficients": certs }), Some(values))
            }
            Err(e) => (false, json!({ "error": e.to_string() }), None),
        };
        items.push(ReportItem::new(
            format!("integrality-{label}"),
            "S*χ_V = Σ_i f_i δ_i with every f_i an algebraic integer",
            pass,
            witness,
        ));

        let image = hit_act_dual_on_alg(&zeta, &integrals.integral, h);
        let coords = dual_table.coordinates(&DualVector::new(image));
        let (pass, witness) = match (&coords, &values) {
            (Some(c), Some(f)) => {
                let mut pass = true;
                let mut certs = Vec::with_capacity(c.len());
                for ((x, fi), m) in c.iter().zip(f).zip(&dual_blocks.blocks) {
                    let (ok, cert) = certificate(x);
                    pass &= ok && *x == fi.times(&CycScalar::from_int(m.degree as i64));
                    certs.push(cert);
                }
                (pass, json!({ "coordinates": strings(c), "certificates": certs }))
            }
            (None, _) => (false, json!({ "error": "(S*χ_V)Λ is not in the span of the H*-characters" })),
            (Some(c), None) => (false, json!({ "coordinates": strings(c) })),
        };
        items.push(ReportItem::new(
            format!("coordinates-{label}"),
            "(S*χ_V)Λ = Σ_i f_i (dim M_i) χ_{M_i} with algebraic-integer coordinates",
            pass,
            witness,
        ));
    }
    SuiteReport::new(Suite::Proposition, items)
}

/// `f(φ) = φ ⇀ Λ` is bijective, exchanges characters and centers, and sends
/// `χ_{V*}` to `(dim H / dim V) e_V`.
pub fn verify_section4(
    h: &HopfData,
    blocks: &BlockDecomposition,
    integrals: &IntegralPair,
    table: &CharacterTable,
    dual: &HopfData,
    dual_table: &CharacterTable,
) -> SuiteReport {
    let d = h.dim();
    let mut items = Vec::new();
    let rank = f_matrix(integrals, h).rank();
    items.push(ReportItem::new(
        "bijective",
        "f : H* → H, f(φ) = φ ⇀ Λ, is bijective",
        rank == d,
        json!({ "rank": rank, "dim": d }),
    ));

    let images: Vec<Vec<CycScalar>> = table.characters.iter().map(|chi| f_map(chi, integrals, h)).collect();
    let pass = same_span(&images, &blocks.center_basis);
    items.push(ReportItem::new(
        "characters-to-center",
        "f(C(H)) = Z(H)",
        pass,
        json!({
            "rank_image": rank_of(&images),
            "dim_center": blocks.center_basis.len(),
            "characters": table.len(),
        }),
    ));

    let dual_center = center(dual);
    let images: Vec<Vec<CycScalar>> =
        dual_center.iter().map(|z| f_map(&DualVector::new(z.clone()), integrals, h)).collect();
    let pass = same_span(&images, &dual_table.vectors());
    items.push(ReportItem::new(
        "dual-center-to-dual-characters",
        "f(Z(H*)) = C(H*)",
        pass,
        json!({
            "rank_image": rank_of(&images),
            "dim_dual_center": dual_center.len(),
            "dual_characters": dual_table.len(),
        }),
    ));

    let idempotents = blocks.idempotents();
    for (v, (b, chi)) in blocks.blocks.iter().zip(&table.characters).enumerate() {
        let image = f_map(&h.dual_antipode(chi), integrals, h);
        let expected = scale(&b.idempotent, &ratio(d, b.degree));
        let divides = d.is_multiple_of(b.degree);
        let (pass, witness) = match coordinates_in(&idempotents, &image) {
            Some(coords) => {
                let cert = is_algebraic_integer(&coords[v]);
                let pass = image == expected && cert.replay() && cert.is_integer == divides;
                (pass, json!({ "coordinate": cert.summary(), "divides": divides }))
            }
            None => (false, json!({ "error": "f(χ_{V*}) is not in the span of the central idempotents" })),
        };
        items.push(ReportItem::new(
            format!("closure-{}", b.label),
            "f(χ_{V*}) = (dim H / dim V) e_V, whose coordinate is an algebraic integer iff dim V divides dim H",
            pass,
            witness,
        ));
    }
    SuiteReport::new(Suite::Section4, items)
}

/// One row per block: degree, divisibility, and whether the character is
/// central in `H*`. Divisibility is asserted only for central characters.
pub fn kaplansky_report(h: &HopfData, table: &CharacterTable) -> SuiteReport {
    let d = h.dim();
    let items = table
        .characters
        .iter()
        .enumerate()
        .map(|(v, chi)| {
            let degree = table.degrees[v];
            let divides = d.is_multiple_of(degree);
            let central = is_central_character(chi, h);
            ReportItem::new(
                format!("row-{}", table.labels[v]),
                "dim V divides dim H (asserted only when χ_V ∈ Z(H*))",
                divides || !central,
                json!({ "dim_V": degree, "dim_H": d, "divides": divides, "central_character": central }),
            )
        })
        .collect();
    SuiteReport::new(Suite::Kaplansky, items)
}

/// Integer basis of the center of the fusion ring, in character coordinates.
pub fn fusion_center(fusion: &FusionRing) -> Vec<Vec<BigInt>> {
    let n = fusion.rank();
    let mut data = Vec::new();
    let mut rows = 0;
    for w in 0..n {
        for u in 0..n {
            let row: Vec<Rational> = (0..n)
                .map(|v| {
                    let a = fusion.coefficients[v][w][u] as i64;
                    let b = fusion.coefficients[w][v][u] as i64;
                    Rational::from_integer(BigInt::from(a - b))
                })
                .collect();
            if row.iter().any(|c| !Field::is_zero(c)) {
                data.extend(row);
                rows += 1;
            }
        }
    }
    let kernel = if rows == 0 {
        (0..n).map(|i| (0..n).map(|j| Rational::from_integer(BigInt::from((i == j) as i64))).collect()).collect()
    } else {
        kernel_basis(&Matrix::new(rows, n, data))
    };
    kernel.into_iter().map(primitive_integer_vector).collect()
}

fn primitive_integer_vector(v: Vec<Rational>) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| (q * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::from(0), |acc, x| acc.gcd(x));
    if g <= BigInt::from(1) {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Applies `f` to a basis of the center of the fusion ring and certifies the
/// coordinates of each image in the `e_V` basis. Reports findings only.
pub fn explore_central_fusion(
    h: &HopfData,
    table: &CharacterTable,
    fusion: &FusionRing,
    blocks: &BlockDecomposition,
    integrals: &IntegralPair,
) -> SuiteReport {
    let n = fusion.rank();
    let basis = fusion_center(fusion);
    let mut items = vec![ReportItem::new(
        "center-rank",
        format!("{EXPLORATORY}rank of the center of G_0(H)"),
        true,
        json!({ "rank": basis.len(), "fusion_rank": n, "commutative": basis.len() == n }),
    )];
    let idempotents = blocks.idempotents();
    for (k, xi) in basis.iter().enumerate() {
        let mut element = DualVector::zero(h.dim());
        for (a, chi) in xi.iter().zip(&table.characters) {
            element = element.add(&chi.scale(&CycScalar::rational(Rational::from_integer(a.clone()))));
        }
        let image = f_map(&element, integrals, h);
        let witness = match coordinates_in(&idempotents, &image) {
            Some(coords) => {
                let certs: Vec<Value> = coords.iter().map(|c| certificate(c).1).collect();
                let integral = coords.iter().all(|c| certificate(c).0);
                json!({
                    "coefficients": xi.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                    "coordinates": certs,
                    "all_integral": integral,
                })
            }
            None => json!({ "error": "f(ξ) is not in Z(H)" }),
        };
        items.push(ReportItem::new(
            format!("center-{}", k + 1),
            format!("{EXPLORATORY}coordinates of f(ξ) in the e_V basis for a central ξ ∈ G_0(H)"),
            true,
            witness,
        ));
    }
    SuiteReport::new(Suite::CentralFusion, items)
}

/// Runs one suite through the cached pipeline.
pub fn run_suite(a: &Analysis, suite: Suite) -> Result<SuiteReport> {
    let h = a.algebra();
    Ok(match suite {
        Suite::Axioms => axioms_suite(a.axioms()),
        Suite::Integrals => integrals_suite(h, a.integrals()?),
        Suite::Lemma1 => verify_lemma1(h, a.blocks()?, a.integrals()?, a.characters()?),
        Suite::Corollary => verify_corollary(h, a.dual_blocks()?, a.integrals()?, a.dual_characters()?, a.seed()),
        Suite::Proposition => {
            verify_proposition(h, a.characters()?, a.dual_blocks()?, a.dual_characters()?, a.integrals()?)
        }
        Suite::Section4 => {
            verify_section4(h, a.blocks()?, a.integrals()?, a.characters()?, a.dual(), a.dual_characters()?)
        }
        Suite::Kaplansky => kaplansky_report(h, a.characters()?),
        Suite::CentralFusion => explore_central_fusion(h, a.characters()?, a.fusion()?, a.blocks()?, a.integrals()?),
    })
}

/// Runs the given suites in order. A failing axiom suite stops the run,
/// since every later stage assumes a Hopf algebra.
pub fn run_suites(a: &Analysis, suites: &[Suite]) -> Result<VerificationReport> {
    let mut out = Vec::with_capacity(suites.len());
    for &suite in suites {
        let report = run_suite(a, suite)?;
        let stop = suite == Suite::Axioms && !report.passed();
        out.push(report);
        if stop {
            break;
        }
    }
    Ok(VerificationReport::new(a.algebra(), out))
}

#[cfg(test)]
mod tests;

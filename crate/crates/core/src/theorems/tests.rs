use super::*;
use crate::builders::{builtin_group, function_algebra, group_algebra, tensor_product};

fn analysis(h: HopfData) -> Analysis {
    Analysis::with_defaults(h)
}

fn c(n: i64) -> CycScalar {
    CycScalar::from_int(n)
}

#[test]
fn kc2_lemma1_sign_block() {
    // oracle: Λ = e + g, χ_sign = δ_e - δ_g, so (S*χ_sign) ⇀ Λ = e - g = 2 e_sign
    let a = analysis(group_algebra(&builtin_group("C2").unwrap()));
    let report = run_suite(&a, Suite::Lemma1).unwrap();
    assert!(report.passed());
    let sign = a
        .blocks()
        .unwrap()
        .blocks
        .iter()
        .find(|b| b.idempotent[1] == CycScalar::rational(crate::arith::rat(-1, 2)))
        .unwrap();
    let item = report.item(&format!("A-{}", sign.label)).unwrap();
    assert_eq!(item.witness["lhs"], json!(["1", "-1"]));
}

#[test]
fn corrupted_idempotent_fails_item_a() {
    let a = analysis(group_algebra(&builtin_group("S3").unwrap()));
    let mut blocks = a.blocks().unwrap().clone();
    let target = blocks.blocks.iter().position(|b| b.degree == 2).unwrap();
    blocks.blocks[target].idempotent.swap(0, 3);
    let report = verify_lemma1(a.algebra(), &blocks, a.integrals().unwrap(), a.characters().unwrap());
    let item = report.item(&format!("A-{}", blocks.blocks[target].label)).unwrap();
    assert!(!item.pass);
    assert!(item.witness["difference"].as_array().unwrap().iter().any(|x| x != "0"));
    assert!(!report.passed());
}

#[test]
fn ks3_all_suites_pass() {
    let a = analysis(group_algebra(&builtin_group("S3").unwrap()));
    let report = run_suites(&a, &Suite::ALL).unwrap();
    for s in &report.suites {
        assert!(s.passed(), "{}: {:?}", s.name, s.failures().collect::<Vec<_>>());
    }
    assert!(report.overall);
    let s4 = report.suite("section4").unwrap();
    let w = &s4.item("characters-to-center").unwrap().witness;
    assert_eq!((w["rank_image"].as_u64(), w["dim_center"].as_u64()), (Some(3), Some(3)));
    let fusion = report.suite("central-fusion").unwrap();
    assert_eq!(fusion.item("center-rank").unwrap().witness["rank"], json!(3));
    assert!(fusion.items.iter().all(|i| i.statement.starts_with("exploratory")));
}

#[test]
fn function_algebra_proposition_has_one_central_block() {
    // oracle: Z(kS3) ∩ span of the point masses on S3 contains δ_e only
    let a = analysis(function_algebra(&builtin_group("S3").unwrap()));
    let report = run_suite(&a, Suite::Proposition).unwrap();
    assert!(report.passed());
    let divides: Vec<_> = report.items.iter().filter(|i| i.id.starts_with("divides-")).collect();
    let skipped = report.items.iter().filter(|i| i.id.starts_with("skipped-")).count();
    assert_eq!((divides.len(), skipped), (1, 5));
    assert_eq!(divides[0].witness["quotient"], json!("6"));
    let fusion = run_suite(&a, Suite::CentralFusion).unwrap();
    assert_eq!(fusion.item("center-rank").unwrap().witness["rank"], json!(3));
}

#[test]
fn kc2_corollary_sign_block() {
    // oracle: the dual blocks of kC2 are δ_e and δ_g; δ_g ⇀ (e + g) = g, and
    // the H*-characters are e and g
    let a = analysis(group_algebra(&builtin_group("C2").unwrap()));
    let report = run_suite(&a, Suite::Corollary).unwrap();
    assert!(report.passed(), "{report:?}");
    let dual_chars = a.dual_characters().unwrap();
    assert!(dual_chars.vectors().contains(&vec![c(0), c(1)]));
    assert_eq!(report.item("subsets").unwrap().witness["count"], json!(3));
}

#[test]
fn kaplansky_rows_for_q8_and_tensor() {
    let a = analysis(group_algebra(&builtin_group("Q8").unwrap()));
    let report = run_suite(&a, Suite::Kaplansky).unwrap();
    let degrees: Vec<u64> = report.items.iter().map(|i| i.witness["dim_V"].as_u64().unwrap()).collect();
    assert_eq!(degrees, vec![1, 1, 1, 1, 2]);
    assert!(report.items.iter().all(|i| i.witness["divides"] == json!(true)));

    let s3 = builtin_group("S3").unwrap();
    let c2 = builtin_group("C2").unwrap();
    let t = tensor_product(&group_algebra(&s3), &function_algebra(&c2));
    let report = run_suite(&analysis(t), Suite::Kaplansky).unwrap();
    let mut degrees: Vec<u64> = report.items.iter().map(|i| i.witness["dim_V"].as_u64().unwrap()).collect();
    degrees.sort();
    assert_eq!(degrees, vec![1, 1, 1, 1, 2, 2]);
    assert!(report.passed());
}

#[test]
fn proposition_agrees_with_kaplansky_on_central_blocks() {
    let a = analysis(function_algebra(&builtin_group("S3").unwrap()));
    let prop = run_suite(&a, Suite::Proposition).unwrap();
    let kap = run_suite(&a, Suite::Kaplansky).unwrap();
    for row in &kap.items {
        let label = row.id.trim_start_matches("row-");
        let central = row.witness["central_character"] == json!(true);
        match prop.item(&format!("divides-{label}")) {
            Some(item) => {
                assert!(central);
                assert_eq!(item.pass, row.witness["divides"] == json!(true));
            }
            None => assert!(!central),
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let build = || {
        let a = analysis(group_algebra(&builtin_group("D4").unwrap()));
        run_suites(&a, &Suite::ALL).unwrap().to_json()
    };
    assert_eq!(build(), build());
}

#[test]
fn report_schema_keys() {
    let a = analysis(group_algebra(&builtin_group("C3").unwrap()));
    let value: Value = serde_json::from_str(&run_suites(&a, &[Suite::Axioms]).unwrap().to_json()).unwrap();
    let keys: Vec<&str> = value.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, vec!["algebra", "dim", "overall", "suites"]);
    let suite = value["suites"][0].as_object().unwrap();
    assert_eq!(suite.keys().collect::<Vec<_>>(), vec!["items", "name"]);
    let item = value["suites"][0]["items"][0].as_object().unwrap();
    assert_eq!(item.keys().collect::<Vec<_>>(), vec!["id", "pass", "statement", "witness"]);
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!("lemma2".parse::<Suite>().is_err());
}

#[test]
fn fusion_center_of_abelian_group_is_everything() {
    let a = analysis(group_algebra(&builtin_group("C2xC2").unwrap()));
    let report = run_suite(&a, Suite::CentralFusion).unwrap();
    assert_eq!(report.item("center-rank").unwrap().witness["commutative"], json!(true));
    assert!(report.items[1..].iter().all(|i| i.witness["all_integral"] == json!(true)));
}

fn ks3() -> Analysis {
    analysis(group_algebra(&builtin_group("S3").unwrap()))
}

#[test]
fn negative_control_axioms() {
    // mutation: Δ(b_0) gains a b_0 ⊗ b_1 term
    let h = group_algebra(&builtin_group("C2").unwrap());
    let mut t = h.tensors();
    t.comult[1] = c(1);
    let broken = HopfData::new("broken", 2, h.field().clone(), t).unwrap();
    let report = axioms_suite(&crate::hopf::check_axioms(&broken));
    assert!(!report.item("coassociativity").unwrap().pass || !report.item("counit").unwrap().pass);
}

#[test]
fn negative_control_integrals() {
    // mutation: λ scaled by 2
    let a = ks3();
    let mut ip = a.integrals().unwrap().clone();
    ip.dual_integral = ip.dual_integral.scale(&c(2));
    let report = integrals_suite(a.algebra(), &ip);
    assert!(!report.item("lambda-unit").unwrap().pass);
    assert_eq!(report.item("lambda-unit").unwrap().witness["value"], json!("2"));
}

#[test]
fn negative_control_corollary() {
    // mutation: the first two H*-characters exchanged
    let a = analysis(group_algebra(&builtin_group("C3").unwrap()));
    let mut table = a.dual_characters().unwrap().clone();
    table.characters.swap(0, 1);
    let report = verify_corollary(a.algebra(), a.dual_blocks().unwrap(), a.integrals().unwrap(), &table, 0);
    assert!(!report.passed());
    assert!(!report.item("subsets").unwrap().pass);
}

#[test]
fn negative_control_proposition_and_kaplansky() {
    // mutation: the two-dimensional block of kS3 claims degree 4
    let a = ks3();
    let mut table = a.characters().unwrap().clone();
    let v = table.degrees.iter().position(|&d| d == 2).unwrap();
    table.degrees[v] = 4;
    let h = a.algebra();
    let prop =
        verify_proposition(h, &table, a.dual_blocks().unwrap(), a.dual_characters().unwrap(), a.integrals().unwrap());
    assert!(!prop.item(&format!("divides-{}", table.labels[v])).unwrap().pass);
    let kap = kaplansky_report(h, &table);
    assert!(!kap.item(&format!("row-{}", table.labels[v])).unwrap().pass);
}

#[test]
fn negative_control_section4() {
    // mutation: Λ replaced by the identity element, which is not an integral
    let a = ks3();
    let mut ip = a.integrals().unwrap().clone();
    ip.integral = a.algebra().unit().to_vec();
    let report = verify_section4(
        a.algebra(),
        a.blocks().unwrap(),
        &ip,
        a.characters().unwrap(),
        a.dual(),
        a.dual_characters().unwrap(),
    );
    assert!(!report.passed());
}

#[test]
fn lemma1_trace_character_matches_classical_values() {
    // oracle: the two-dimensional character of S3 is (2, 0, 0, 0, -1, -1)
    let a = ks3();
    let b = a.blocks().unwrap().blocks.iter().find(|b| b.degree == 2).unwrap();
    let chi = trace_character(a.algebra(), &b.idempotent, 2);
    assert_eq!(chi.coords, [2, 0, 0, 0, -1, -1].map(c).to_vec());
}

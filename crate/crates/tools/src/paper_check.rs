//! End-to-end reproduction of the worked examples and the main theorem.

use bousfield_core::bousfield::verify_main_theorem;
use bousfield_core::builtin;
use bousfield_core::enumerate::lattice_corpus;
use bousfield_core::ideal::{
    enumerate_localizing_ideals, idempotent_analysis, is_radical, match_bousfield, nilradical, spectrum,
    spectrum_correspondence, IdealSet,
};
use bousfield_core::support::SupportObject;
use bousfield_core::{BousfieldLattice, CMonoid0, ElemSet, Lattice};

use crate::dot::set_label;
use crate::report::Report;

/// Named verdicts plus pass/fail tallies.
pub struct Verdicts {
    report: Report,
    passed: usize,
    failed: usize,
}

impl Verdicts {
    pub fn new() -> Verdicts {
        Verdicts {
            report: Report::new(),
            passed: 0,
            failed: 0,
        }
    }

    /// Records `PASS`, or `FAIL: witness`.
    pub fn check(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) {
        let v = if ok {
            self.passed += 1;
            "PASS".to_string()
        } else {
            self.failed += 1;
            format!("FAIL: {}", witness())
        };
        match name.split_once('.') {
            Some((group, key)) => self.report.section(group).push(key, v),
            None => self.report.push(name, v),
        };
    }

    pub fn passed(&self) -> usize {
        self.passed
    }

    pub fn failed(&self) -> usize {
        self.failed
    }

    pub fn into_report(self) -> Report {
        self.report
    }
}

impl Default for Verdicts {
    fn default() -> Verdicts {
        Verdicts::new()
    }
}

fn names(m: &CMonoid0, sets: impl IntoIterator<Item = ElemSet>) -> Vec<String> {
    sets.into_iter().map(|s| set_label(m, s)).collect()
}

fn set(m: &CMonoid0, elems: &[&str]) -> ElemSet {
    m.set_of(elems).expect("known elements")
}

fn class_names(bl: &BousfieldLattice) -> Vec<String> {
    (0..bl.len()).map(|i| bl.class_name(i)).collect()
}

fn annihilator_of(m: &CMonoid0, x: &str) -> ElemSet {
    let e = m.index_of(x).expect("known element");
    SupportObject::generator(m, e).annihilator()
}

/// Two-element monoid `{1, m}` with `m·m = m`, plus an adjoined zero.
fn two_element_example(section: &mut Report, v: &mut Verdicts) {
    let m = builtin::paper_s4();
    let bl = BousfieldLattice::enumerate(&m);
    section.push("monoid", m.names().to_vec());
    section.push("bousfield_classes", bl.len());
    section.push("bousfield_lattice", class_names(&bl));
    let full = m.nonzero();
    v.check(
        "s4.bousfield_is_two_element_lattice",
        bl.len() == 2 && bl.member_sets().contains(&full) && bl.member_sets().contains(&ElemSet::EMPTY),
        || format!("classes {:?}", class_names(&bl)),
    );

    let ideal_m = IdealSet {
        members: set(&m, &["m"]),
    };
    let ideals = enumerate_localizing_ideals(&m).expect("small monoid");
    section.push("localizing_ideals", names(&m, ideals.iter().map(|i| i.members)));
    let proper_nonzero = ideals.contains(&ideal_m) && !ideal_m.members.is_empty() && ideal_m.members != full;
    v.check("s4.ideal_m_proper_nonzero", proper_nonzero, || {
        format!("ideals {:?}", names(&m, ideals.iter().map(|i| i.members)))
    });
    v.check(
        "s4.ideal_m_not_bousfield",
        match_bousfield(ideal_m, &bl).is_none(),
        || "{m} is the annihilator of some object".to_string(),
    );

    let orth = m.orthogonal_set(ideal_m.members).expect("known elements");
    section.push("orthogonal_to_m", set_label(&m, orth));
    v.check("s4.nothing_orthogonal_to_m", orth.is_empty(), || set_label(&m, orth));

    let idem = idempotent_analysis(&m).expect("small monoid");
    v.check(
        "s4.idempotent_without_complement",
        idem.acyclization_without_complement(),
        || "every idempotent generator has an orthogonal idempotent".to_string(),
    );
}

/// Four-element monoid `{0, 1, x, y}` with `x² = xy = 0`, `y² = y`.
fn four_element_example(section: &mut Report, v: &mut Verdicts) {
    let m = builtin::paper_s5();
    let bl = BousfieldLattice::enumerate(&m);
    let ideals = enumerate_localizing_ideals(&m).expect("small monoid");
    section.push("monoid", m.names().to_vec());
    section.push("localizing_ideals", names(&m, ideals.iter().map(|i| i.members)));
    v.check("s5.five_localizing_ideals", ideals.len() == 5, || {
        format!("{} ideals", ideals.len())
    });

    let nil = nilradical(&m);
    section.push("nilradical", set_label(&m, nil.members));
    v.check("s5.nilradical_is_x", nil.members == set(&m, &["x"]), || {
        set_label(&m, nil.members)
    });

    let spec = spectrum(&m).expect("small monoid");
    section.push("spectrum", names(&m, spec.iter().map(|i| i.members)));
    let want_spec = vec![set(&m, &["x"]), set(&m, &["x", "y"])];
    let got_spec: Vec<ElemSet> = spec.iter().map(|i| i.members).collect();
    v.check("s5.spectrum_has_two_points", got_spec == want_spec, || {
        format!("{:?}", names(&m, got_spec.iter().copied()))
    });

    section.push("bousfield_classes", bl.len());
    section.push("bousfield_lattice", class_names(&bl));
    let mut got: Vec<ElemSet> = bl.member_sets().to_vec();
    let mut want = vec![m.nonzero(), set(&m, &["x"]), set(&m, &["x", "y"]), ElemSet::EMPTY];
    got.sort();
    want.sort();
    v.check("s5.bousfield_lattice_four_classes", got == want, || {
        format!("{:?}", class_names(&bl))
    });
    let ann_y = annihilator_of(&m, "y");
    let ann_x = annihilator_of(&m, "x");
    section.section("annihilator").push("k_y", set_label(&m, ann_y));
    section.section("annihilator").push("k_x", set_label(&m, ann_x));
    v.check(
        "s5.annihilators",
        ann_y == set(&m, &["x"]) && ann_x == set(&m, &["x", "y"]),
        || format!("A(k_y) = {}, A(k_x) = {}", set_label(&m, ann_y), set_label(&m, ann_x)),
    );

    let ideal_y = IdealSet {
        members: set(&m, &["y"]),
    };
    v.check(
        "s5.ideal_y_not_radical_not_bousfield",
        ideals.contains(&ideal_y) && !is_radical(&m, ideal_y) && match_bousfield(ideal_y, &bl).is_none(),
        || "{y} is radical or a Bousfield class".to_string(),
    );

    let mut radicals_and_zero: Vec<ElemSet> = ideals
        .iter()
        .filter(|&&i| is_radical(&m, i))
        .map(|i| i.members)
        .chain([ElemSet::EMPTY])
        .collect();
    radicals_and_zero.sort();
    radicals_and_zero.dedup();
    v.check("s5.bousfield_is_radicals_plus_zero", radicals_and_zero == got, || {
        format!(
            "radicals ∪ {{⟨0⟩}} = {:?}",
            names(&m, radicals_and_zero.iter().copied())
        )
    });

    let (q, _) = m.quotient_by_nil();
    section.section("quotient").push("monoid", q.names().to_vec());
    let qy = q.index_of("y").ok();
    let shape_ok = q.len() == 3 && qy.is_some_and(|y| q.mul(y, y) == y);
    v.check(
        "s5.quotient_is_two_element_example",
        shape_ok && q.isomorphism(&builtin::paper_s4()).is_some(),
        || format!("quotient {:?}", q.names()),
    );

    let corr = spectrum_correspondence(&m).expect("small monoid");
    let q_spec = spectrum(&q).expect("small monoid");
    section
        .section("quotient")
        .push("spectrum", names(&q, q_spec.iter().map(|i| i.members)));
    v.check(
        "s5.quotient_keeps_spectrum",
        corr.bijective && corr.preserves_inclusion,
        || format!("{:?}", corr.pairs),
    );

    let qbl = BousfieldLattice::enumerate(&q);
    section.section("quotient").push("bousfield_classes", qbl.len());
    v.check("s5.quotient_bousfield_two_classes", qbl.len() == 2, || {
        format!("{}", qbl.len())
    });
    let q_ideal_y = IdealSet {
        members: set(&q, &["y"]),
    };
    v.check(
        "s5.quotient_ideal_y_radical_not_bousfield",
        is_radical(&q, q_ideal_y) && match_bousfield(q_ideal_y, &qbl).is_none(),
        || "{y} in the quotient".to_string(),
    );
}

/// Lattices the main theorem is checked on: every distributive lattice up
/// to six elements, powersets up to 16 elements, three divisor lattices,
/// chains up to 8 and three finite topologies.
pub fn main_theorem_corpus() -> Vec<(String, Lattice)> {
    let mut out = Vec::new();
    for (i, l) in lattice_corpus(6, true)
        .expect("within cap")
        .items
        .into_iter()
        .enumerate()
    {
        out.push((format!("distributive-{}-{i}", l.len()), l));
    }
    for n in 0..=4 {
        out.push((format!("powerset-{n}"), builtin::powerset(n)));
    }
    for n in [12, 30, 36] {
        out.push((format!("divisors-{n}"), builtin::divisors(n).expect("positive")));
    }
    for n in 1..=8 {
        out.push((format!("chain-{n}"), builtin::chain(n)));
    }
    out.push(("sierpinski".to_string(), builtin::sierpinski()));
    out.push(("topology-two-points".to_string(), builtin::two_points_and_generic()));
    out.push(("topology-dense-point".to_string(), builtin::dense_point()));
    out
}

fn main_theorem(section: &mut Report, v: &mut Verdicts) {
    let corpus = main_theorem_corpus();
    let mut failures = Vec::new();
    let mut boolean_inputs = 0;
    let mut recovered = 0;
    let mut sizes = Report::new();
    for (name, l) in &corpus {
        match verify_main_theorem(l) {
            Ok(r) => {
                if !r.holds() {
                    failures.push(name.clone());
                }
                if let Some(rec) = r.recovers_input {
                    boolean_inputs += 1;
                    recovered += usize::from(rec);
                }
                sizes.push(
                    name.clone(),
                    format!(
                        "|L| = {}, |L¬¬| = {}, |A| = {}",
                        l.len(),
                        r.booleanization.algebra.len(),
                        r.phi.bousfield.len()
                    ),
                );
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    section.push("lattices_checked", corpus.len());
    section.push("boolean_inputs", boolean_inputs);
    section.push("sizes", sizes);
    v.check("main_theorem.boolean_isomorphism", failures.is_empty(), || {
        failures.join(", ")
    });
    v.check(
        "main_theorem.boolean_inputs_recovered",
        recovered == boolean_inputs,
        || format!("{recovered} of {boolean_inputs}"),
    );
}

/// Every verdict is PASS on a correct build.
pub fn run_paper_check() -> Report {
    let mut report = Report::for_command("paper-check");
    let mut v = Verdicts::new();
    two_element_example(report.section("s4"), &mut v);
    four_element_example(report.section("s5"), &mut v);
    main_theorem(report.section("main_theorem"), &mut v);
    let (passed, failed) = (v.passed(), v.failed());
    report.push("verdicts", v.into_report());
    report.section("summary").push("passed", passed).push("failed", failed);
    report
}

/// True when the report's summary shows no failures.
pub fn all_passed(report: &Report) -> bool {
    report.get("summary.failed").and_then(|v| v.as_int()) == Some(0)
}

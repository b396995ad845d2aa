use std::process::Command;
use std::sync::OnceLock;

use bousfield_core::builtin;
use bousfield_core::enumerate::{lattice_corpus, monoid_corpus};
use bousfield_core::BousfieldLattice;
use bousfield_tools::dot::{bousfield_dot, poset_dot};
use bousfield_tools::input::{parse_input, print_input, InputKind, InputSpec, ParseErrorKind, Structure};
use bousfield_tools::run_paper_check;
use proptest::prelude::*;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bousfield"))
}

fn write_temp(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("bousfield-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn dot_examples() {
    let two = poset_dot("C2", builtin::chain(2).poset());
    assert_eq!(two.matches("->").count(), 1);
    let one = poset_dot("C1", builtin::chain(1).poset());
    assert_eq!(one.matches("->").count(), 0);
    assert_eq!(one.matches("[label=").count(), 1);
    let s5 = bousfield_dot("M4", &BousfieldLattice::enumerate(&builtin::paper_s5()));
    assert_eq!(s5.matches("[label=").count(), 4);
    assert_eq!(s5.matches("->").count(), 3);
    assert_eq!(
        s5,
        bousfield_dot("M4", &BousfieldLattice::enumerate(&builtin::paper_s5()))
    );
}

#[test]
fn paper_check_report_keys() {
    let r = run_paper_check();
    let text = r.to_text();
    assert!(text.contains("s4.bousfield_classes = 2\n"));
    assert!(text.contains("s5.bousfield_classes = 4\n"));
    assert!(!text.contains("FAIL"), "{text}");
    assert!(r.to_json().starts_with("{\n  \"schema\": 1,"));
}

#[test]
fn exit_codes() {
    let good = write_temp(
        "m4.txt",
        "monoid M4\nelements 0 1 x y\nzero 0\nunit 1\nmul x x 0\nmul x y 0\nmul y y y\n",
    );
    let bad = write_temp("bad.txt", "monoid bad\nelements 0 1 x\nzero 0\nunit 1\n");
    let out = bin().arg("spectrum").arg(&good).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("points = [{x}, {x,y}]"));
    let out = bin().arg("validate").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("undeclared"));
    let out = bin().args(["heyting", "--builtin", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["paper-check", "--quiet"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn heyting_refuses_non_distributive_input() {
    let m3 = write_temp(
        "m3.txt",
        "lattice M3\nelements 0 a b c 1\ncover 0 a\ncover 0 b\ncover 0 c\ncover a 1\ncover b 1\ncover c 1\n",
    );
    let out = bin().arg("heyting").arg(&m3).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().arg("validate").arg(&m3).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("order.distributive = false"), "{text}");
}

#[test]
fn bousfield_checks_main_theorem_for_lattices() {
    let out = bin()
        .args(["bousfield", "--builtin", "divisors:12", "--json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["classes"], 4);
    assert_eq!(v["verdicts"]["main_theorem"], "PASS");
}

#[test]
fn render_is_stable() {
    let run = || bin().args(["render", "--builtin", "paper-s5"]).output().unwrap().stdout;
    let a = run();
    assert!(String::from_utf8(a.clone()).unwrap().starts_with("digraph"));
    assert_eq!(a, run());
}

#[test]
fn enumerate_dump_round_trips() {
    let dir = std::env::temp_dir().join(format!("bousfield-dump-{}", std::process::id()));
    let out = bin()
        .args(["enumerate", "--max-size", "5", "--check", "all", "--dump"])
        .arg(&dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let mut files = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let spec = parse_input(&text).unwrap();
        assert_eq!(print_input(&spec), text);
        files += 1;
    }
    assert_eq!(files, 10 + 69);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn parse_errors_carry_positions() {
    let e = parse_input("topology T\npoints p q\nopen\nopen p q\nopen r\n").unwrap_err();
    assert_eq!((e.line, e.column, e.kind), (5, 6, ParseErrorKind::Semantic));
    let e = parse_input("monoid M\nelements 0 1\nunit 1\nmul 1\n").unwrap_err();
    assert_eq!((e.line, e.kind), (4, ParseErrorKind::Syntax));
    let e = parse_input("monoid M\nelements 0 1\nzero 0\n").unwrap_err();
    assert_eq!(e.kind, ParseErrorKind::Semantic);
    let e = parse_input("poset P\nelements a b\ncover a b\ncover b a\n").unwrap_err();
    assert_eq!(e.kind, ParseErrorKind::Semantic);
}

fn canonical_inputs() -> &'static [InputSpec] {
    static INPUTS: OnceLock<Vec<InputSpec>> = OnceLock::new();
    INPUTS.get_or_init(build_inputs)
}

fn build_inputs() -> Vec<InputSpec> {
    let mut out = Vec::new();
    for (i, l) in lattice_corpus(6, false).unwrap().items.into_iter().enumerate() {
        out.push(InputSpec {
            kind: InputKind::Lattice,
            name: format!("L{i}"),
            body: Structure::Lattice(l.clone()),
            generator: None,
        });
        out.push(InputSpec {
            kind: InputKind::Poset,
            name: format!("P{i}"),
            body: Structure::Poset(l.poset().clone()),
            generator: None,
        });
    }
    for (i, m) in monoid_corpus(5).unwrap().items.into_iter().enumerate() {
        out.push(InputSpec {
            kind: InputKind::Monoid,
            name: format!("M{i}"),
            body: Structure::Monoid(m),
            generator: None,
        });
    }
    for text in [
        "topology T\npoints p q r\nopen\nopen p\nopen q\nopen p q\nopen p q r\n",
        "monoid S\nelements 1 m\nunit 1\nmul m m m\n",
        "builtin divisors 30\n",
        "builtin paper-s5\n",
    ] {
        out.push(parse_input(text).unwrap());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn parse_print_round_trip(pick in any::<prop::sample::Index>()) {
        let inputs = canonical_inputs();
        let spec = &inputs[pick.index(inputs.len())];
        let text = print_input(spec);
        let back = parse_input(&text).unwrap();
        prop_assert_eq!(&back, spec);
        prop_assert_eq!(print_input(&back), text);
    }

    /// Shuffled directive order and extra comments do not change the result.
    #[test]
    fn monoid_directive_order_is_irrelevant(pick in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let ms: Vec<&InputSpec> = canonical_inputs().iter().filter(|s| s.kind == InputKind::Monoid).collect();
        let spec = ms[pick.index(ms.len())];
        let text = print_input(spec);
        let mut lines: Vec<&str> = text.lines().collect();
        let mut tail: Vec<&str> = lines.split_off(2);
        let mut s = seed;
        for i in (1..tail.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            tail.swap(i, (s >> 33) as usize % (i + 1));
        }
        let shuffled = format!("# shuffled\n{}\n{}\n", lines.join("\n"), tail.join("\n  # note\n"));
        prop_assert_eq!(&parse_input(&shuffled).unwrap(), spec);
    }
}

//! The closed set of rule systems, built once on first use.

use std::fmt;
use std::sync::LazyLock;

use crate::error::{Error, Result};
use crate::rewrite::Rule;
use crate::semantics::View;
use crate::term::{Signature, SignatureId, Symbol};
use crate::weights::WeightScheme;

pub struct System {
    id: &'static str,
    signature: Signature,
    rules: Vec<Rule>,
    scheme: WeightScheme,
    view: View,
    provenance: &'static str,
    reconstructed: bool,
}

impl System {
    pub fn id(&self) -> &str {
        self.id
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule(&self, id: &str) -> Option<&Rule> {
        self.rules.iter().find(|r| r.id() == id)
    }

    pub fn rule_index(&self, id: &str) -> Option<usize> {
        self.rules.iter().position(|r| r.id() == id)
    }

    pub fn scheme(&self) -> WeightScheme {
        self.scheme
    }

    pub fn view(&self) -> View {
        self.view
    }

    pub fn provenance(&self) -> &str {
        self.provenance
    }

    pub fn reconstructed(&self) -> bool {
        self.reconstructed
    }

    pub fn info(&self) -> SystemInfo {
        SystemInfo {
            id: self.id.to_string(),
            rule_count: self.rules.len(),
            signature: self.signature.id(),
            scheme: self.scheme.to_string(),
            view: self.view.to_string(),
            provenance: self.provenance.to_string(),
            reconstructed: self.reconstructed,
        }
    }

    /// A system outside the catalog, for exercising checkers on rules the
    /// catalog would reject.
    #[doc(hidden)]
    pub fn custom(id: &'static str, signature: Signature, rules: Vec<Rule>) -> System {
        let (scheme, view) = defaults_for(signature.id());
        System {
            id,
            signature,
            rules,
            scheme,
            view,
            provenance: "custom",
            reconstructed: false,
        }
    }

    /// `lhs -> rhs`, one rule per line.
    pub fn dump(&self) -> String {
        self.rules.iter().map(|r| format!("{r}\n")).collect()
    }
}

impl fmt::Debug for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("System")
            .field("id", &self.id)
            .field("signature", &self.signature.id())
            .field("rules", &self.rules)
            .finish()
    }
}

fn defaults_for(sig: SignatureId) -> (WeightScheme, View) {
    match sig {
        SignatureId::Ring | SignatureId::Any => (WeightScheme::R, View::RING),
        SignatureId::RingExt => (WeightScheme::R.with_ext(), View::RING),
        SignatureId::Unary => (WeightScheme::U, View::UNARY),
        SignatureId::UnaryExt => (WeightScheme::U.with_ext(), View::UNARY),
        SignatureId::UnaryNat => (WeightScheme::U, View::UNARY_NAT),
        SignatureId::Successor => (WeightScheme::S, View::SUCCESSOR),
        SignatureId::SuccessorExt => (WeightScheme::S.with_ext(), View::SUCCESSOR),
        SignatureId::SuccessorNat => (WeightScheme::S, View::SUCCESSOR_NAT),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SystemInfo {
    pub id: String,
    pub rule_count: usize,
    pub signature: SignatureId,
    pub scheme: String,
    pub view: String,
    pub provenance: String,
    pub reconstructed: bool,
}

const D1: &[(&str, &str)] = &[
    ("R1", "x+0 -> x"),
    ("R2", "0+x -> x"),
    ("R3", "x+(y+z) -> (x+y)+z"),
    ("R4", "x*0 -> 0"),
    ("R5", "x*1 -> x"),
    ("R6", "x*(y+z) -> (x*y)+(x*z)"),
    ("R7", "-0 -> 0"),
    ("R8", "(-1)+1 -> 0"),
    ("R9", "(-(x+1))+1 -> -x"),
    ("R10", "-(-x) -> x"),
    ("R11", "x+(-y) -> -((-x)+y)"),
    ("R12", "x*(-y) -> -(x*y)"),
];

const D2_CHANGES: &[(&str, &str, &str)] = &[
    ("R2", "R2'", "0+1 -> 1"),
    ("R3", "R3'", "x+(y+1) -> (x+y)+1"),
    ("R6", "R6'", "x*(y+1) -> (x*y)+x"),
];

const D0_LEGACY: &[(&str, &str)] = &[
    ("r5", "1+(-1) -> 0"),
    ("r6", "(x+1)+(-1) -> x"),
    ("r7", "x+(-(y+1)) -> (x+(-y))+(-1)"),
    ("r11", "(-x)+(-y) -> -(x+y)"),
];

const N1: &[(&str, &str)] = &[
    ("U1", "x+0 -> x"),
    ("U2", "x+y' -> x'+y"),
    ("U3", "x*0 -> 0"),
    ("U4", "x*y' -> x+(x*y)"),
];

const N2: &[(&str, &str)] = &[
    ("U1", "x+0 -> x"),
    ("U2'", "x+y' -> (x+y)'"),
    ("U3", "x*0 -> 0"),
    ("U4'", "x*y' -> (x*y)+x"),
];

const UNARY_MINUS: &[(&str, &str)] = &[
    ("U5", "-0 -> 0"),
    ("U6", "(-x')' -> -x"),
    ("U7", "-(-x) -> x"),
    ("U8", "x+(-y) -> -((-x)+y)"),
    ("U9", "x*(-y) -> -(x*y)"),
];

const N3: &[(&str, &str)] = &[
    ("S1", "x+0 -> x"),
    ("S2", "x+S(y) -> S(x+y)"),
    ("S3", "x*0 -> 0"),
    ("S4", "x*S(y) -> (x*y)+x"),
];

const N4: &[(&str, &str)] = &[
    ("S1", "x+0 -> x"),
    ("S2'", "x+S(y) -> S(x)+y"),
    ("S3", "x*0 -> 0"),
    ("S4'", "x*S(y) -> x+(x*y)"),
];

const SUCC_MINUS: &[(&str, &str)] = &[
    ("S5", "-0 -> 0"),
    ("S6", "S(-S(x)) -> -x"),
    ("S7", "-(-x) -> x"),
    ("S8", "x+(-y) -> -((-x)+y)"),
    ("S9", "x*(-y) -> -(x*y)"),
];

const UNARY_PRED_SUB: &[(&str, &str)] = &[
    ("P1", "P(0) -> -0'"),
    ("P2", "P(x') -> x"),
    ("P3", "P(-x) -> -x'"),
    ("Sub", "x-y -> x+(-y)"),
];

const SUCC_PRED_SUB: &[(&str, &str)] = &[
    ("P1", "P(0) -> -S(0)"),
    ("P2", "P(S(x)) -> x"),
    ("P3", "P(-x) -> -S(x)"),
    ("Sub", "x-y -> x+(-y)"),
];

struct Entry {
    id: &'static str,
    signature: Signature,
    rules: Vec<(&'static str, &'static str)>,
    provenance: &'static str,
    reconstructed: bool,
}

fn cat(parts: &[&[(&'static str, &'static str)]]) -> Vec<(&'static str, &'static str)> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn d2_rules(r6_alternative: Option<(&'static str, &'static str)>) -> Vec<(&'static str, &'static str)> {
    D1.iter()
        .map(|&(id, text)| {
            match D2_CHANGES.iter().find(|(old, _, _)| *old == id) {
                Some(&(_, new_id, new_text)) => match (new_id, r6_alternative) {
                    ("R6'", Some(alt)) => alt,
                    _ => (new_id, new_text),
                },
                None => (id, text),
            }
        })
        .collect()
}

fn entries() -> Vec<Entry> {
    let d0 = {
        let mut rules: Vec<_> = D1.iter().copied().filter(|(id, _)| *id != "R11").collect();
        // legacy rules sit where R11 was, ahead of R12
        let r12 = rules.pop().expect("R12");
        rules.extend_from_slice(D0_LEGACY);
        rules.push(r12);
        rules
    };
    let entry = |id, signature, rules, provenance| Entry {
        id,
        signature,
        rules,
        provenance,
        reconstructed: false,
    };
    vec![
        Entry {
            id: "d0",
            signature: Signature::RING,
            rules: d0,
            provenance: "reconstructed: d1 with R11 replaced by the legacy rules r5, r6, r7, r11",
            reconstructed: true,
        },
        entry("d1", Signature::RING, D1.to_vec(), "ring view, twelve rules R1-R12"),
        entry("d2", Signature::RING, d2_rules(None), "ring view, d1 with R2', R3', R6'"),
        entry(
            "d2m",
            Signature::RING,
            d2_rules(Some(("R6*", "x*(y+1) -> x+(x*y)"))),
            "d2 with the alternative R6* for R6'",
        ),
        entry("n1", Signature::UNARY_NAT, N1.to_vec(), "unary naturals, U1-U4"),
        entry("z1", Signature::UNARY, cat(&[N1, UNARY_MINUS]), "unary integers, U1-U9"),
        entry("n2", Signature::UNARY_NAT, N2.to_vec(), "unary naturals, U1, U2', U3, U4'"),
        entry("z2", Signature::UNARY, cat(&[N2, UNARY_MINUS]), "unary integers, n2 plus U5-U9"),
        entry("n3", Signature::SUCCESSOR_NAT, N3.to_vec(), "successor naturals, S1-S4"),
        entry("z3", Signature::SUCCESSOR, cat(&[N3, SUCC_MINUS]), "successor integers, S1-S9"),
        entry("n4", Signature::SUCCESSOR_NAT, N4.to_vec(), "successor naturals, S1, S2', S3, S4'"),
        entry("z4", Signature::SUCCESSOR, cat(&[N4, SUCC_MINUS]), "successor integers, n4 plus S5-S9"),
        entry(
            "z1p",
            Signature::UNARY_EXT,
            cat(&[N1, UNARY_MINUS, UNARY_PRED_SUB]),
            "z1 with predecessor and subtraction",
        ),
        entry(
            "z2p",
            Signature::UNARY_EXT,
            cat(&[N2, UNARY_MINUS, UNARY_PRED_SUB]),
            "z2 with predecessor and subtraction",
        ),
        entry(
            "z3p",
            Signature::SUCCESSOR_EXT,
            cat(&[N3, SUCC_MINUS, SUCC_PRED_SUB]),
            "z3 with predecessor and subtraction",
        ),
        entry(
            "z4p",
            Signature::SUCCESSOR_EXT,
            cat(&[N4, SUCC_MINUS, SUCC_PRED_SUB]),
            "z4 with predecessor and subtraction",
        ),
    ]
}

pub const EXPECTED_RULE_COUNTS: &[(&str, usize)] = &[
    ("d0", 15),
    ("d1", 12),
    ("d2", 12),
    ("d2m", 12),
    ("n1", 4),
    ("z1", 9),
    ("n2", 4),
    ("z2", 9),
    ("n3", 4),
    ("z3", 9),
    ("n4", 4),
    ("z4", 9),
    ("z1p", 13),
    ("z2p", 13),
    ("z3p", 13),
    ("z4p", 13),
];

/// Successor systems paired with the unary systems they rename.
pub const RENAMINGS: &[(&str, &str)] = &[("n3", "n2"), ("z3", "z2"), ("n4", "n1"), ("z4", "z1")];

fn build(entry: Entry) -> System {
    let rules = entry
        .rules
        .iter()
        .map(|(id, text)| {
            Rule::parse(*id, text, &entry.signature)
                .unwrap_or_else(|e| panic!("catalog rule {}/{id} `{text}`: {e}", entry.id))
        })
        .collect();
    let (scheme, view) = defaults_for(entry.signature.id());
    System {
        id: entry.id,
        signature: entry.signature,
        rules,
        scheme,
        view,
        provenance: entry.provenance,
        reconstructed: entry.reconstructed,
    }
}

static CATALOG: LazyLock<Vec<System>> = LazyLock::new(|| {
    let systems: Vec<System> = entries().into_iter().map(build).collect();
    let problems = validate(&systems);
    assert!(problems.is_empty(), "catalog is inconsistent:\n{}", problems.join("\n"));
    systems
});

/// Everything the catalog promises about itself. Empty when consistent.
fn validate(systems: &[System]) -> Vec<String> {
    let mut problems = Vec::new();
    let find = |id: &str| systems.iter().find(|s| s.id == id);
    for &(id, n) in EXPECTED_RULE_COUNTS {
        match find(id) {
            Some(s) if s.rules.len() == n => {}
            Some(s) => problems.push(format!("{id}: {} rules, expected {n}", s.rules.len())),
            None => problems.push(format!("{id}: missing")),
        }
    }
    for s in systems {
        for r in &s.rules {
            if !r.is_left_linear() {
                problems.push(format!("{}/{}: left-hand side is not linear", s.id, r.id()));
            }
        }
    }
    problems.extend(renaming_mismatches_in(systems));
    problems
}

fn renaming_mismatches_in(systems: &[System]) -> Vec<String> {
    let find = |id: &str| systems.iter().find(|s| s.id == id);
    let mut out = Vec::new();
    for &(succ_id, unary_id) in RENAMINGS {
        let (Some(succ), Some(unary)) = (find(succ_id), find(unary_id)) else {
            out.push(format!("{succ_id}/{unary_id}: missing"));
            continue;
        };
        if succ.rules.len() != unary.rules.len() {
            out.push(format!(
                "{succ_id} has {} rules but {unary_id} has {}",
                succ.rules.len(),
                unary.rules.len()
            ));
            continue;
        }
        for (s, u) in succ.rules.iter().zip(&unary.rules) {
            let lhs = u.lhs().rename_symbol(Symbol::Append, Symbol::Succ);
            let rhs = u.rhs().rename_symbol(Symbol::Append, Symbol::Succ);
            if (&lhs, &rhs) != (s.lhs(), s.rhs()) {
                out.push(format!(
                    "{succ_id}/{} is `{s}` but renaming {unary_id}/{} gives `{lhs} -> {rhs}`",
                    s.id(),
                    u.id()
                ));
            }
        }
    }
    out
}

/// Rule-by-rule differences between each successor system and the renamed
/// unary system it should equal. Empty for the shipped catalog.
pub fn renaming_mismatches() -> Vec<String> {
    renaming_mismatches_in(&CATALOG)
}

pub fn all_systems() -> &'static [System] {
    &CATALOG
}

pub fn get_system(id: &str) -> Result<&'static System> {
    CATALOG
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownSystem {
            id: id.to_string(),
            known: CATALOG.iter().map(|s| s.id.to_string()).collect(),
        })
}

pub fn list_systems() -> Vec<SystemInfo> {
    CATALOG.iter().map(System::info).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::Pattern;

    fn ids(sys: &System) -> Vec<&str> {
        sys.rules().iter().map(Rule::id).collect()
    }

    #[test]
    fn lookup_examples() {
        let d2 = get_system("d2").unwrap();
        assert_eq!(
            ids(d2),
            ["R1", "R2'", "R3'", "R4", "R5", "R6'", "R7", "R8", "R9", "R10", "R11", "R12"]
        );
        let z1 = get_system("z1").unwrap();
        assert_eq!(ids(z1), ["U1", "U2", "U3", "U4", "U5", "U6", "U7", "U8", "U9"]);
        let d0 = get_system("d0").unwrap();
        assert_eq!(d0.rules().len(), 15);
        assert!(d0.rule("R11").is_none());
        for r in ["r5", "r6", "r7", "r11"] {
            assert!(d0.rule(r).is_some(), "{r}");
        }
        assert!(d0.reconstructed());
        assert!(!d2.reconstructed());
    }

    #[test]
    fn unknown_system_lists_valid_ids() {
        match get_system("z9") {
            Err(Error::UnknownSystem { id, known }) => {
                assert_eq!(id, "z9");
                assert_eq!(known.len(), 16);
                assert!(known.iter().any(|k| k == "d2m"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn listing() {
        let all = list_systems();
        assert_eq!(all.len(), 16);
        let count = |id: &str| all.iter().find(|i| i.id == id).unwrap().rule_count;
        assert_eq!(count("n1"), 4);
        assert_eq!(count("z3"), 9);
        for &(id, n) in EXPECTED_RULE_COUNTS {
            assert_eq!(count(id), n, "{id}");
        }
    }

    #[test]
    fn inventory_spot_checks() {
        let p = |s: &str| Pattern::parse(s, &Signature::RING).unwrap();
        let r6 = get_system("d2").unwrap().rule("R6'").unwrap();
        assert_eq!((r6.lhs(), r6.rhs()), (&p("x*(y+1)"), &p("(x*y)+x")));
        let d2m = get_system("d2m").unwrap();
        assert!(d2m.rule("R6'").is_none());
        let alt = d2m.rule("R6*").unwrap();
        assert_eq!((alt.lhs(), alt.rhs()), (&p("x*(y+1)"), &p("x+(x*y)")));
        assert_eq!(d2m.rule_index("R6*"), Some(5));
    }

    #[test]
    fn integer_systems_extend_natural_ones() {
        for (n, z) in [("n1", "z1"), ("n2", "z2"), ("n3", "z3"), ("n4", "z4")] {
            let n = get_system(n).unwrap();
            let z = get_system(z).unwrap();
            for r in n.rules() {
                assert_eq!(z.rule(r.id()), Some(r));
            }
        }
        for (z, zp) in [("z1", "z1p"), ("z2", "z2p"), ("z3", "z3p"), ("z4", "z4p")] {
            let z = get_system(z).unwrap();
            let zp = get_system(zp).unwrap();
            assert_eq!(&zp.rules()[..9], z.rules());
        }
    }

    #[test]
    fn successor_systems_are_renamed_unary_systems() {
        assert!(renaming_mismatches().is_empty());
    }

    #[test]
    fn renaming_check_catches_a_changed_rule() {
        let mut systems: Vec<System> = entries().into_iter().map(build).collect();
        let z3 = systems.iter_mut().find(|s| s.id == "z3").unwrap();
        z3.rules[1] = Rule::parse("S2", "x+S(y) -> S(x)+y", &Signature::SUCCESSOR).unwrap();
        let problems = renaming_mismatches_in(&systems);
        assert_eq!(problems.len(), 1);
        assert!(problems[0].starts_with("z3/S2"), "{problems:?}");
    }

    #[test]
    fn metadata() {
        let z3p = get_system("z3p").unwrap();
        assert_eq!(z3p.scheme(), WeightScheme::S.with_ext());
        assert_eq!(z3p.view(), View::SUCCESSOR);
        assert_eq!(get_system("n1").unwrap().view(), View::UNARY_NAT);
        for s in all_systems() {
            for r in s.rules() {
                for sym in r.lhs().symbols().into_iter().chain(r.rhs().symbols()) {
                    assert!(s.signature().contains(sym));
                    assert!(s.scheme().covers(sym), "{} {sym}", s.id());
                }
            }
        }
    }

    #[test]
    fn dump_is_one_rule_per_line() {
        let dump = get_system("n1").unwrap().dump();
        assert_eq!(
            dump,
            "x+0 -> x\nx+y' -> x'+y\nx*0 -> 0\nx*y' -> x+x*y\n"
        );
    }
}

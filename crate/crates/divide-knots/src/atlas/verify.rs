//! Named verification suites re-deriving the library's identities on
//! moderate grids, with a serializable pass/fail report.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{selector_expected_gap, sweep_records, AtlasError, SweepSpec};
use crate::berge::{
    coef_closed_form, delta_choice, record_for, translate_np, translate_np_inv, BergeType,
};
use crate::braid::{
    column_braid, conjugators, cp_braid, equal_with_budget, mirror_case, w_word,
};
use crate::invar::{
    alexander, alexander_seifert, bennequin_genus, same_profile, torus_alexander, AlexanderCaps,
};
use crate::lshape::{region_by_moves, region_for, relation_search, Edge, LRegion, Rect, SquareMove};
use crate::sign::Sign;
use crate::trace::{is_immersed_arc, place, place_rect, trace};
use crate::ttk::{audit_twisted_identities, two_twist_chain, AuditVerdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Berge,
    Lshape,
    Trace,
    BraidClaims,
    InvarCross,
    TtkAudit,
    Relations,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Berge,
        Suite::Lshape,
        Suite::Trace,
        Suite::BraidClaims,
        Suite::InvarCross,
        Suite::TtkAudit,
        Suite::Relations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Berge => "berge",
            Suite::Lshape => "lshape",
            Suite::Trace => "trace",
            Suite::BraidClaims => "braid-claims",
            Suite::InvarCross => "invar-cross",
            Suite::TtkAudit => "ttk-audit",
            Suite::Relations => "relations",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| AtlasError::Grid(format!("unknown suite {s:?}")))
    }
}

const FAILURE_CAP: usize = 12;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub open_questions: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
    pub ok: bool,
}

struct Tally {
    suite: Suite,
    passed: usize,
    failed: usize,
    open_questions: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(suite: Suite) -> Self {
        Tally {
            suite,
            passed: 0,
            failed: 0,
            open_questions: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < FAILURE_CAP {
                self.failures.push(message());
            }
        }
    }

    fn open(&mut self) {
        self.open_questions += 1;
    }

    fn report(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite.name().to_string(),
            passed: self.passed,
            failed: self.failed,
            open_questions: self.open_questions,
            failures: self.failures,
        }
    }
}

fn verify_grid() -> SweepSpec {
    SweepSpec {
        a_range: 2..=9,
        k_range: 0..=2,
        t_range: -2..=2,
        ..SweepSpec::default()
    }
}

fn berge_suite(tally: &mut Tally) {
    for record in sweep_records(&SweepSpec {
        a_range: 2..=31,
        ..verify_grid()
    }) {
        let p = record.params;
        tally.check(
            coef_closed_form(&record) == Ok(record.coef),
            || format!("closed form disagrees at {p:?}"),
        );
        tally.check(2 * p.big_a < record.big_b, || {
            format!("B too small at {p:?}")
        });
        tally.check(record.coef > 0, || {
            format!("canonical coefficient not positive at {p:?}")
        });
        let flipped = record_for(p.knot_type, -p.delta, p.epsilon, p.big_a, p.k, p.t);
        tally.check(
            flipped.map(|f| (f.b, f.coef)) == Ok((-record.b, -record.coef)),
            || format!("sign flip is not a mirror at {p:?}"),
        );
        if let Ok((n, pp)) = translate_np_inv(p.knot_type, p.epsilon, p.big_a, p.k) {
            tally.check(
                translate_np(p.knot_type, p.epsilon, n, pp) == Ok((p.big_a, p.k)),
                || format!("translation round trip fails at {p:?}"),
            );
        } else {
            tally.check(false, || format!("translation undefined at {p:?}"));
        }
    }
}

fn lshape_suite(tally: &mut Tally) {
    for record in sweep_records(&verify_grid()) {
        let p = record.params;
        let region = match region_for(p.knot_type, p.epsilon, p.big_a, p.k, p.t) {
            Ok(r) => r,
            Err(e) => {
                tally.check(false, || format!("no region at {p:?}: {e}"));
                continue;
            }
        };
        let by_moves =
            region_by_moves(p.knot_type, p.epsilon, p.big_a, p.k, p.t).map(|(base, moves)| {
                crate::lshape::apply_moves(&base, &moves).map(|r| r == region || r == region.swap())
            });
        tally.check(matches!(by_moves, Ok(Ok(true))), || {
            format!("moves do not rebuild the region at {p:?}")
        });
        let d = region.double_points();
        tally.check(
            d.map(|d| region.area() - 2 * d == region.a2() + region.b2() - 1)
                == Ok(true),
            || format!("area law fails at {p:?}"),
        );
        let gap = region.area() - record.coef.abs();
        tally.check(gap == selector_expected_gap(&record), || {
            format!("area/coefficient gap off at {p:?}")
        });
        tally.check(region == region.swap().swap(), || {
            format!("swap is not an involution at {p:?}")
        });
    }
}

fn trace_suite(tally: &mut Tally) {
    let spec = SweepSpec {
        a_range: 2..=7,
        ..verify_grid()
    };
    for record in sweep_records(&spec) {
        let p = record.params;
        let Ok(region) = region_for(p.knot_type, p.epsilon, p.big_a, p.k, p.t) else {
            tally.check(false, || format!("no region at {p:?}"));
            continue;
        };
        match trace(&place(&region)) {
            Ok(t) => {
                tally.check(is_immersed_arc(&t), || {
                    format!("curve is not one arc at {p:?}")
                });
                tally.check(
                    region.double_points() == Ok(t.double_point_count as i64),
                    || format!("double point count off at {p:?}"),
                );
            }
            Err(e) => tally.check(false, || format!("trace failed at {p:?}: {e}")),
        }
    }
    for a in 2..=7i64 {
        for b in a..=7i64 {
            let g = num_integer::gcd(a, b);
            let Ok(t) = trace(&place_rect(&Rect::new(a, b).unwrap())) else {
                tally.check(false, || format!("trace failed on Rect({a},{b})"));
                continue;
            };
            tally.check(t.arcs + 2 * t.circles == g as usize, || {
                format!("component count off on Rect({a},{b})")
            });
            if g == 1 {
                tally.check(
                    t.double_point_count as i64 == (a - 1) * (b - 1) / 2,
                    || format!("crossing count off on Rect({a},{b})"),
                );
            }
        }
    }
}

fn braid_claims_suite(tally: &mut Tally) {
    let budget = crate::braid::default_budget();
    for a1 in 2..=5i64 {
        for a2 in (a1 + 1)..=6i64 {
            for b1 in 1..=3i64 {
                for b2 in (b1 + 1)..=4i64 {
                    let Ok(region) = LRegion::new(a1, a2, b1, b2) else {
                        continue;
                    };
                    let Ok(conj) = conjugators(a1, a2) else {
                        tally.check(false, || format!("no conjugators for {a1},{a2}"));
                        continue;
                    };
                    let mut lhs = conj.omega.inverse();
                    lhs.extend(&column_braid(&region));
                    lhs.extend(&conj.omega);
                    let mut rhs = w_word(a1 as usize, a2 as usize);
                    rhs.extend(&w_word(a2 as usize, a2 as usize).pow(b1));
                    rhs.extend(&w_word(a1 as usize, a2 as usize).pow(b2 - b1 - 1));
                    match equal_with_budget(&lhs, &rhs, budget) {
                        Ok(eq) => tally.check(eq, || {
                            format!("conjugated claim fails on [{a1},{a2};{b1},{b2}]")
                        }),
                        Err(e) => tally.check(false, || {
                            format!("reduction exhausted on [{a1},{a2};{b1},{b2}]: {e}")
                        }),
                    }
                }
            }
        }
    }
    for a1 in 1..=4i64 {
        for a2 in (a1 + 1)..=6i64 {
            for c in 1..=4i64 {
                let mut lhs = w_word(a2 as usize, a2 as usize).pow(c);
                lhs.extend(&w_word(a1 as usize, a2 as usize).inverse());
                let rhs = match mirror_case(Sign::Plus, Sign::Minus, a1, a2, c) {
                    Ok(m) if !m.mirror => cp_braid(&m.region),
                    _ => continue,
                };
                match same_profile(&lhs, &rhs) {
                    Ok(eq) => tally.check(eq, || {
                        format!("reduction identity fails at a1={a1} a2={a2} c={c}")
                    }),
                    Err(e) => tally.check(false, || {
                        format!("profile failed at a1={a1} a2={a2} c={c}: {e}")
                    }),
                }
            }
        }
    }
}

fn invar_cross_suite(tally: &mut Tally) {
    for p in 2..=6i64 {
        for q in (p + 1)..=7i64 {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let word = w_word(q as usize, q as usize).pow(p);
            let closed = torus_alexander(p, q);
            tally.check(alexander(&word).ok() == closed.clone().ok(), || {
                format!("Burau disagrees with the closed form on T({p},{q})")
            });
            tally.check(alexander_seifert(&word).ok() == closed.ok(), || {
                format!("Seifert route disagrees on T({p},{q})")
            });
        }
    }
    let caps = AlexanderCaps::default();
    for record in sweep_records(&SweepSpec {
        a_range: 2..=4,
        k_range: 0..=1,
        t_range: -1..=1,
        ..SweepSpec::default()
    }) {
        let region = region_for(
            record.params.knot_type,
            record.params.epsilon,
            record.params.big_a,
            record.params.k,
            record.params.t,
        )
        .unwrap();
        let word = cp_braid(&region);
        if !caps.allows(&word) {
            continue;
        }
        let burau = alexander(&word).ok();
        tally.check(burau.is_some(), || {
            format!("Burau route failed at {:?}", record.params)
        });
        if word.len() <= 60 {
            tally.check(burau == alexander_seifert(&word).ok(), || {
                format!("routes disagree at {:?}", record.params)
            });
        }
        let genus = bennequin_genus(&word).ok();
        tally.check(
            burau
                .as_ref()
                .zip(genus)
                .map(|(a, g)| a.span() == 2 * g)
                .unwrap_or(false),
            || format!("span is not twice the genus at {:?}", record.params),
        );
    }
}

fn ttk_audit_suite(tally: &mut Tally) {
    match audit_twisted_identities(9, 2, AlexanderCaps::default()) {
        Ok(rows) => {
            for row in rows {
                if row.open_question {
                    tally.open();
                    continue;
                }
                tally.check(
                    matches!(
                        row.verdict,
                        AuditVerdict::RegionMatch | AuditVerdict::ProfileMatch
                    ),
                    || {
                        format!(
                            "identity {} fails at A={} k={}",
                            row.identity, row.big_a, row.k
                        )
                    },
                );
            }
        }
        Err(e) => tally.check(false, || format!("audit aborted: {e}")),
    }
    for (knot_type, eps, a, k, t) in [
        (BergeType::III, Sign::Minus, 2, 2, 0),
        (BergeType::V, Sign::Plus, 3, 1, 1),
        (BergeType::III, Sign::Plus, 2, 0, -1),
    ] {
        let record = record_for(knot_type, delta_choice(eps, t), eps, a, k, t).unwrap();
        match two_twist_chain(&record) {
            Ok(chain) => tally.check(
                chain.len() as i64 == record.params.k + record.params.t.abs() + 1
                    && chain.iter().all(|w| w.is_positive()),
                || format!("twist chain malformed at {:?}", record.params),
            ),
            Err(e) => tally.check(false, || format!("chain failed at {:?}: {e}", record.params)),
        }
    }
}

fn relations_suite(tally: &mut Tally) {
    for a in 3..=9i64 {
        for k in 0..=3i64 {
            let src = record_for(BergeType::III, Sign::Minus, Sign::Plus, a, 0, 0).unwrap();
            let dst = record_for(BergeType::IV, Sign::Plus, Sign::Minus, 2 * a - 1, k, 0).unwrap();
            tally.check(
                relation_search(&src, &dst)
                    == Some(SquareMove {
                        edge: Edge::ShortArmB1,
                        n: k + 1,
                    }),
                || format!("short-arm family fails at A={a} k={k}"),
            );
        }
    }
    for k in 0..=3i64 {
        let src = record_for(BergeType::III, Sign::Minus, Sign::Plus, 2, 0, 0).unwrap();
        let dst = record_for(BergeType::V, delta_choice(Sign::Minus, 0), Sign::Minus, 3, k, 0)
            .unwrap();
        tally.check(
            relation_search(&src, &dst)
                == Some(SquareMove {
                    edge: Edge::ShortArmB1,
                    n: k + 1,
                }),
            || format!("short-arm family fails at A=2 k={k}"),
        );
    }
    for a in 2..=9i64 {
        for k in 0..=3i64 {
            let src = record_for(BergeType::III, Sign::Plus, Sign::Minus, a, 0, 0).unwrap();
            let dst = record_for(BergeType::IV, Sign::Minus, Sign::Plus, 2 * a + 1, k, 0).unwrap();
            tally.check(
                relation_search(&src, &dst)
                    == Some(SquareMove {
                        edge: Edge::LongArmB2,
                        n: k + 1,
                    }),
                || format!("long-arm family fails at A={a} k={k}"),
            );
        }
    }
    let unrelated = (
        record_for(BergeType::III, Sign::Plus, Sign::Minus, 4, 0, 0).unwrap(),
        record_for(BergeType::VI, Sign::Plus, Sign::Minus, 8, 0, 0).unwrap(),
    );
    tally.check(relation_search(&unrelated.0, &unrelated.1).is_none(), || {
        "unrelated tuples reported as one move apart".to_string()
    });
}

pub fn run_suite(suite: Suite) -> SuiteReport {
    let mut tally = Tally::new(suite);
    match suite {
        Suite::Berge => berge_suite(&mut tally),
        Suite::Lshape => lshape_suite(&mut tally),
        Suite::Trace => trace_suite(&mut tally),
        Suite::BraidClaims => braid_claims_suite(&mut tally),
        Suite::InvarCross => invar_cross_suite(&mut tally),
        Suite::TtkAudit => ttk_audit_suite(&mut tally),
        Suite::Relations => relations_suite(&mut tally),
    }
    tally.report()
}

pub fn run(suites: &[Suite]) -> VerifyReport {
    let suites: Vec<SuiteReport> = suites.iter().map(|&s| run_suite(s)).collect();
    let ok = suites.iter().all(SuiteReport::ok);
    VerifyReport { suites, ok }
}

pub fn run_all() -> VerifyReport {
    run(&Suite::ALL)
}

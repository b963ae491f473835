//! Seeded exact-identity suite: every relation is checked as a structurally
//! empty residual on random rational labels and monomial probes.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::FunExpr;
use crate::operators::{
    bracket_table, conjugate, cprime, factorization_residuals, hamiltonian_on, reflect, tilde_bracket_table,
    verify_intertwining, Diag, Family, Gen, LabeledState, OperatorName, ParamPoint, Realization, Separated,
};
use crate::rational::{rat, Rational};

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub probes: usize,
    pub failures: usize,
    /// Label and residual of the first failing probe.
    pub first_failure: Option<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status}  {}  ({}/{} probes)",
            self.name,
            self.probes - self.failures,
            self.probes
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub probes: usize,
    pub checks: Vec<IdentityCheck>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// Random rationals with small denominators for labels and exponents.
pub struct ProbeSource {
    rng: ChaCha8Rng,
}

impl ProbeSource {
    pub fn new(seed: u64) -> Self {
        ProbeSource {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self, max_abs: i64) -> Rational {
        let den = [1, 2, 3, 4, 5, 7][self.rng.gen_range(0..6)];
        let num = self.rng.gen_range(-max_abs * den..=max_abs * den);
        rat(num, den)
    }

    fn coeff(&mut self) -> Rational {
        loop {
            let c = self.rational(3);
            if c != rat(0, 1) {
                return c;
            }
        }
    }

    pub fn label(&mut self) -> ParamPoint {
        ParamPoint::new(self.rational(6), self.rational(6), self.rational(6))
    }

    /// `c · cosᵖ sinᵠ coshʳ sinhˢ` with random rational data.
    pub fn monomial(&mut self) -> FunExpr {
        let c = self.coeff();
        FunExpr::term(
            c,
            self.rational(4),
            self.rational(4),
            self.rational(4),
            self.rational(4),
        )
    }

    pub fn theta_monomial(&mut self) -> FunExpr {
        let c = self.coeff();
        FunExpr::term(c, self.rational(4), self.rational(4), rat(0, 1), rat(0, 1))
    }

    pub fn xi_monomial(&mut self) -> FunExpr {
        let c = self.coeff();
        FunExpr::term(c, rat(0, 1), rat(0, 1), self.rational(4), self.rational(4))
    }

    pub fn state(&mut self) -> LabeledState {
        LabeledState::new(self.label(), self.monomial())
    }
}

struct Recorder {
    probes: usize,
    checks: Vec<IdentityCheck>,
}

impl Recorder {
    fn run(&mut self, name: String, mut one: impl FnMut(usize) -> Option<String>) {
        let mut check = IdentityCheck {
            name,
            probes: self.probes,
            failures: 0,
            first_failure: None,
        };
        for k in 0..self.probes {
            if let Some(msg) = one(k) {
                check.failures += 1;
                check.first_failure.get_or_insert(msg);
            }
        }
        self.checks.push(check);
    }
}

fn nonzero(label: &ParamPoint, r: &FunExpr) -> Option<String> {
    (!r.is_zero()).then(|| format!("at {label}: residual {r}"))
}

/// Runs the full suite with `probes` random probes per identity.
pub fn run_suite(real: &Realization, seed: u64, probes: usize) -> VerifyReport {
    let mut src = ProbeSource::new(seed);
    let states: Vec<LabeledState> = (0..probes).map(|_| src.state()).collect();
    let theta: Vec<FunExpr> = (0..probes).map(|_| src.theta_monomial()).collect();
    let xi: Vec<FunExpr> = (0..probes).map(|_| src.xi_monomial()).collect();
    let pairs: Vec<(Rational, Rational)> = (0..probes).map(|_| (src.rational(6), src.rational(6))).collect();
    let mut rec = Recorder {
        probes,
        checks: Vec::new(),
    };

    for id in bracket_table().into_iter().chain(tilde_bracket_table()) {
        rec.run(id.to_string(), |k| {
            nonzero(&states[k].label, &id.residual(real, &states[k]))
        });
    }

    for (which, name) in [
        (Separated::Theta, "theta"),
        (Separated::Chi, "chi"),
        (Separated::Beta, "beta"),
    ] {
        let probes = if which == Separated::Theta { &theta } else { &xi };
        rec.run(format!("factorization ({name})"), |k| {
            let (a, b) = &pairs[k];
            let [r1, r2] = factorization_residuals(which, a, b, &probes[k]);
            let bad = !(r1.is_zero() && r2.is_zero());
            bad.then(|| format!("at ({a}, {b}): residuals {r1} ; {r2}"))
        });
    }

    for fam in [Family::A, Family::B, Family::C] {
        rec.run(format!("intertwining ({fam:?})"), |k| {
            let st = &states[k];
            let r = verify_intertwining(fam, &st.label, &st.expr);
            (!r.is_zero()).then(|| format!("at {}: lowering {} ; raising {}", st.label, r.lowering, r.raising))
        });
    }

    rec.run("A - B + C = 0".into(), |k| {
        let st = &states[k];
        let part = |d| real.apply_gen(Gen::Diag(d), st).expr;
        nonzero(&st.label, &(&(&part(Diag::A) - &part(Diag::B)) + &part(Diag::C)))
    });

    rec.run("H = -4 Casimir + Casimir'^2/3 - 15/4".into(), |k| {
        let st = &states[k];
        let cp = cprime(&st.label);
        let scalar = &cp * &cp * rat(1, 3) - rat(15, 4);
        let rhs = &real.casimir(st).scale(&rat(-4, 1)) + &st.expr.scale(&scalar);
        nonzero(&st.label, &(&hamiltonian_on(&st.label, &st.expr) - &rhs))
    });

    for i in 0..3 {
        rec.run(format!("reflection I{i} table"), |k| {
            let st = &states[k];
            for op in OperatorName::LADDERS {
                let got = conjugate(i, op, st).expr;
                let want = real.apply(reflect(i, op).op, st).expr;
                let signed = want.scale(&rat(reflect(i, op).sign as i64, 1));
                if got != signed && got != signed.negate() {
                    return Some(format!("I{i} {op} at {}", st.label));
                }
            }
            None
        });
    }

    VerifyReport {
        seed,
        probes,
        checks: rec.checks,
    }
}

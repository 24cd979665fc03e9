use std::fmt::Write as _;

use modlang::dualdata::{decompose_quotient, extend_datum, solve_rho_weights, LanglandsDualData};
use modlang::field::{Field, QuadraticExt};
use modlang::lattice::{IntMatrix, IntVec, Laurent};
use modlang::rfunc::{
    epsilon_twist, local_rfactor, make_parameter, partial_rfunction, primes_below, split_by_sqrt, DualRepresentation,
    RFactor, TorusPoint, UnramifiedParameter,
};
use modlang::rootdatum::{datum_isomorphic, transport_x, RootDatum, WeylGroup};
use modlang::satake::{is_dot_invariant, tree_structure_constants_capped, SatakeEngine, DEFAULT_TREE_NODE_CAP};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::{
    parse_rational, parse_rationals, parse_vector, parse_vectors, resolve_datum, Cli, CliError, Command, DatumDocument,
    Report, Sign,
};

fn vec_json(v: &IntVec) -> Value {
    json!(v.coords())
}

fn vecs_json(vs: &[IntVec]) -> Value {
    Value::Array(vs.iter().map(vec_json).collect())
}

fn matrix_json(m: &IntMatrix) -> Value {
    json!(m.to_rows())
}

fn laurent_json(l: &Laurent) -> Value {
    json!({
        "display": l.display_in("q"),
        "terms": l.terms().map(|(e, c)| json!([e, c])).collect::<Vec<_>>(),
    })
}

/// The smallest of ℤ[q], ℤ[q⁻¹], ℤ[q, q⁻¹] containing every coefficient.
/// Reported as an observation; nothing downstream relies on it.
fn coefficient_ring<'a>(cs: impl IntoIterator<Item = &'a Laurent>) -> &'static str {
    let (mut neg, mut pos) = (false, false);
    for c in cs {
        neg |= c.min_exponent().is_some_and(|k| k < 0);
        pos |= c.max_exponent().is_some_and(|k| k > 0);
    }
    match (neg, pos) {
        (false, _) => "ℤ[q]",
        (true, false) => "ℤ[q⁻¹]",
        (true, true) => "ℤ[q, q⁻¹]",
    }
}

fn doc_json(d: &RootDatum) -> Value {
    serde_json::to_value(DatumDocument::from_datum(d)).expect("documents serialize")
}

fn list(vs: &[IntVec]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

fn show<F: Field>(vs: &[F]) -> Vec<String> {
    vs.iter().map(|v| v.to_string()).collect()
}

struct Ctx<'a> {
    cli: &'a Cli,
    weyl_cap: usize,
}

impl Ctx<'_> {
    fn dual_data(&self, d: &RootDatum) -> Result<LanglandsDualData, CliError> {
        Ok(LanglandsDualData::with_weyl_cap(d, self.weyl_cap)?)
    }

    fn coweight(&self, d: &RootDatum, s: &str) -> Result<IntVec, CliError> {
        let v = parse_vector(s)?;
        if v.len() != d.rank() {
            return Err(CliError::validation(format!(
                "coweight {v} has length {}, datum rank is {}",
                v.len(),
                d.rank()
            )));
        }
        if v.l1_norm() > self.cli.height_cap {
            return Err(CliError::resource(format!(
                "coweight {v} has height {} above the cap {}",
                v.l1_norm(),
                self.cli.height_cap
            )));
        }
        Ok(v)
    }

    fn representation(
        &self,
        dd: &LanglandsDualData,
        weights: &str,
        orbits: bool,
    ) -> Result<DualRepresentation, CliError> {
        let ws = parse_vectors(weights)?;
        if ws.is_empty() {
            return Err(CliError::usage("no weights given"));
        }
        Ok(if orbits { DualRepresentation::from_orbits(dd, &ws)? } else { DualRepresentation::new(dd, ws)? })
    }
}

/// Executes one parsed command line.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let ctx = Ctx { cli, weyl_cap: cli.effective_weyl_cap()? };
    match &cli.command {
        Command::Datum { datum } => {
            let d = resolve_datum(datum)?;
            Ok(Report { text: crate::emit_datum(&d), json: doc_json(&d) })
        }
        Command::Dual { datum } => {
            let d = resolve_datum(datum)?;
            let dual = d.dual()?;
            let text = format!(
                "dual of {}: {}\n  simple roots:   {}\n  simple coroots: {}",
                d.label(),
                dual.label(),
                list(dual.simple_roots()),
                list(dual.simple_coroots())
            );
            Ok(Report { text, json: json!({ "input": doc_json(&d), "dual": doc_json(&dual) }) })
        }
        Command::Roots { datum } => {
            let d = resolve_datum(datum)?;
            let rs = d.root_system()?;
            let mut text = format!("{}: {} positive roots\n", d.label(), rs.len());
            for r in rs.positive() {
                writeln!(text, "  root {}  coroot {}  height {}", r.root, r.coroot, r.height()).unwrap();
            }
            let json = json!({
                "datum": d.label(),
                "positive_roots": vecs_json(&rs.positive_roots()),
                "positive_coroots": vecs_json(&rs.positive_coroots()),
            });
            Ok(Report { text: text.trim_end().to_string(), json })
        }
        Command::Weyl { datum } => {
            let d = resolve_datum(datum)?;
            let w = WeylGroup::enumerate(&d, ctx.weyl_cap)?;
            let longest = w.longest();
            let text = format!(
                "{}: |W| = {}, longest element has length {} (word {:?})",
                d.label(),
                w.order(),
                longest.length(),
                longest.word
            );
            let json = json!({
                "datum": d.label(),
                "order": w.order(),
                "longest_length": longest.length(),
                "longest_word": longest.word,
            });
            Ok(Report { text, json })
        }
        Command::Rho { datum } => {
            let d = resolve_datum(datum)?;
            d.ensure_valid()?;
            Ok(match solve_rho_weights(&d) {
                Some(sol) => Report {
                    text: format!(
                        "{}: weights of type ρ are {} + span{{{}}}",
                        d.label(),
                        sol.particular,
                        list(&sol.kernel)
                    ),
                    json: json!({
                        "datum": d.label(),
                        "solvable": true,
                        "particular": vec_json(&sol.particular),
                        "kernel": vecs_json(&sol.kernel),
                    }),
                },
                None => Report {
                    text: format!("{}: no integral weight of type ρ", d.label()),
                    json: json!({ "datum": d.label(), "solvable": false, "particular": null, "kernel": [] }),
                },
            })
        }
        Command::Extend { datum } => {
            let d = resolve_datum(datum)?;
            let e = extend_datum(&d)?;
            let dd = ctx.dual_data(&d)?;
            let hint = RootDatum::builtins()
                .into_iter()
                .filter(|b| b.rank() == e.ext().rank())
                .find_map(|b| datum_isomorphic(e.ext(), &b).map(|m| (b, m)));
            let mut text = format!(
                "extended {}: rank {}\n  simple roots:   {}\n  simple coroots: {}\n  r = {}",
                d.label(),
                e.ext().rank(),
                list(e.ext().simple_roots()),
                list(e.ext().simple_coroots()),
                e.r()
            );
            let iso = match &hint {
                Some((b, m)) => {
                    let r = transport_x(m, e.r()).expect("unimodular");
                    let j = transport_x(m, dd.j()).expect("unimodular");
                    write!(text, "\n  isomorphic to {} via {:?}; r ↦ {r}, j ↦ {j}", b.label(), m.to_rows()).unwrap();
                    json!({
                        "builtin": b.label(),
                        "matrix": matrix_json(m),
                        "r": vec_json(&r),
                        "j": vec_json(&j),
                    })
                }
                None => Value::Null,
            };
            let json = json!({
                "base": doc_json(&d),
                "extended": doc_json(e.ext()),
                "r": vec_json(e.r()),
                "delta_index": e.delta_index(),
                "isomorphism": iso,
            });
            Ok(Report { text, json })
        }
        Command::Epsilon { datum } => {
            let d = resolve_datum(datum)?;
            let eps = modlang::dualdata::epsilon_of(&d)?;
            let text = format!("{}: t = {}, ε has order {}", d.label(), eps.t, eps.order);
            Ok(Report { text, json: json!({ "datum": d.label(), "t": vec_json(&eps.t), "order": eps.order }) })
        }
        Command::Dualdata { datum } => {
            let d = resolve_datum(datum)?;
            let dd = ctx.dual_data(&d)?;
            let q = decompose_quotient(&dd)?;
            let cok = q.cokernel.iter().map(|k| format!("ℤ/{k}")).collect::<Vec<_>>().join(" ⊕ ");
            let text = format!(
                "dual data of {}\n  r = {}\n  t = {}\n  j = 2r − t = {}\n  i = p = δ = {}\n  ε order {}\n  cokernel of ℤ ⊕ X → X̃: {cok}, generated by {}\n  kernel element {}",
                d.label(),
                dd.r(),
                dd.t(),
                dd.j(),
                dd.i(),
                dd.epsilon_order(),
                q.generator,
                q.kernel
            );
            let json = json!({
                "datum": d.label(),
                "r": vec_json(dd.r()),
                "t": vec_json(dd.t()),
                "j": vec_json(dd.j()),
                "i": vec_json(&dd.i()),
                "p": vec_json(&dd.p()),
                "epsilon_order": dd.epsilon_order(),
                "cokernel": q.cokernel,
                "cokernel_generator": vec_json(&q.generator),
                "kernel_element": {
                    "scalar": q.kernel.scalar(),
                    "epsilon_parity": vec_json(&q.kernel.epsilon_parity()),
                },
            });
            Ok(Report { text, json })
        }
        Command::Satake { datum, coweight } => {
            let d = resolve_datum(datum)?;
            let lambda = ctx.coweight(&d, coweight)?;
            let dd = ctx.dual_data(&d)?;
            let s = modlang::satake::satake_image(&dd, &lambda)?;
            let invariant = is_dot_invariant(&d, &s.poly)?;
            let mut text = format!("S(e_{lambda}) on {}:\n", d.label());
            let mut terms = Vec::new();
            for (v, c) in s.poly.terms().rev() {
                writeln!(text, "  e^{v}: {}", c.display_in("q")).unwrap();
                terms.push(json!({ "exponent": vec_json(v), "coeff": laurent_json(c) }));
            }
            let ring = coefficient_ring(s.poly.terms().map(|(_, c)| c));
            write!(text, "  dot-invariant: {invariant}\n  coefficients in {ring}").unwrap();
            let json = json!({
                "datum": d.label(),
                "coweight": vec_json(&lambda),
                "terms": terms,
                "dot_invariant": invariant,
                "coefficient_ring": ring,
            });
            Ok(Report { text, json })
        }
        Command::Mult { datum, lhs, rhs } => {
            let d = resolve_datum(datum)?;
            let (l, r) = (ctx.coweight(&d, lhs)?, ctx.coweight(&d, rhs)?);
            let dd = ctx.dual_data(&d)?;
            let h = SatakeEngine::new(&dd).structure(&l, &r)?;
            let top = &l + &r;
            let rescaled = h.rescaled(dd.t(), &top);
            let mut text = format!("e_{l} · e_{r} on {}:\n", d.label());
            let mut terms = Vec::new();
            for (nu, c) in h.terms() {
                writeln!(text, "  ν = {nu}: {}   (rescaled: {})", c.display_in("q"), rescaled[nu].display_in("q"))
                    .unwrap();
                terms.push(json!({
                    "nu": vec_json(nu),
                    "coeff": laurent_json(c),
                    "rescaled": laurent_json(&rescaled[nu]),
                }));
            }
            let raw_ring = coefficient_ring(h.terms().map(|(_, c)| c));
            let rescaled_ring = coefficient_ring(rescaled.values());
            write!(text, "  coefficients in {raw_ring}; rescaled in {rescaled_ring}").unwrap();
            let json = json!({
                "datum": d.label(),
                "lhs": vec_json(&l),
                "rhs": vec_json(&r),
                "terms": terms,
                "coefficient_ring": raw_ring,
                "rescaled_coefficient_ring": rescaled_ring,
            });
            Ok(Report { text: text.trim_end().to_string(), json })
        }
        Command::Oracle { q, max_height } => {
            if !(2..=4).contains(q) {
                return Err(CliError::validation(format!("oracle supports q ∈ {{2, 3, 4}}, got {q}")));
            }
            if *max_height > cli.tree_depth_cap {
                return Err(CliError::resource(format!(
                    "max height {max_height} exceeds the tree depth cap {}",
                    cli.tree_depth_cap
                )));
            }
            // probe the largest ball first so the cap fails fast
            tree_structure_constants_capped(*max_height, 0, *q, cli.tree_depth_cap, DEFAULT_TREE_NODE_CAP)?;
            let report = modlang::satake::compare_rank1_oracle(*q, *max_height)?;
            let mut text = format!(
                "rank-one oracle, q = {q}, max height {max_height}: {} checks, {} failures",
                report.checks.len(),
                report.failures.len()
            );
            for c in &report.checks {
                write!(
                    text,
                    "\n  m={} n={} ν={}: q^{}·a = {}, tree count {}",
                    c.m, c.n, c.nu, c.exponent, c.predicted, c.tree_count
                )
                .unwrap();
            }
            for f in &report.failures {
                write!(text, "\n  FAIL {f}").unwrap();
            }
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "m": c.m, "n": c.n, "nu": c.nu, "exponent": c.exponent,
                        "predicted": c.predicted.to_string(), "tree_count": c.tree_count,
                    })
                })
                .collect();
            let json = json!({
                "q": q,
                "max_height": max_height,
                "passed": report.passed(),
                "checks": checks,
                "failures": report.failures,
            });
            Ok(Report { text, json })
        }
        Command::Rfactor { datum, weights, orbits, values, q, s } => {
            let d = resolve_datum(datum)?;
            let dd = ctx.dual_data(&d)?;
            let tau = ctx.representation(&dd, weights, *orbits)?;
            let q = parse_rational(q)?;
            let x = make_parameter(&dd, q.clone(), parse_rationals(values)?)?;
            let f = local_rfactor(&x, &tau)?;
            rfactor_report(&d, &tau, &x, &f, *s)
        }
        Command::Euler { datum, trivial, primes_below: below, places, s, weights, orbits, values } => {
            let d = match (datum, trivial) {
                (Some(_), true) => return Err(CliError::usage("give either a datum or --trivial, not both")),
                (Some(name), false) => resolve_datum(name)?,
                (None, true) => RootDatum::trivial(),
                (None, false) => return Err(CliError::usage("euler needs a datum or --trivial")),
            };
            let qs: Vec<u64> = match (below, places) {
                (Some(n), None) => primes_below(*n),
                (None, Some(p)) => p
                    .split(',')
                    .filter(|x| !x.trim().is_empty())
                    .map(|x| x.trim().parse::<u64>().map_err(|_| CliError::usage(format!("'{x}' is not a place size"))))
                    .collect::<Result<_, _>>()?,
                _ => return Err(CliError::usage("give --primes-below or --places")),
            };
            let dd = ctx.dual_data(&d)?;
            let tau = match weights {
                Some(w) => ctx.representation(&dd, w, *orbits)?,
                None => DualRepresentation::trivial(&dd),
            };
            let base = match values {
                Some(v) => parse_rationals(v)?,
                None => vec![<BigRational as Field>::one(); d.rank()],
            };
            let params = qs
                .iter()
                .map(|&p| make_parameter(&dd, BigRational::from_integer(p.into()), base.clone()))
                .collect::<Result<Vec<_>, _>>()?;
            let value = partial_rfunction(&params, &tau, *s)?;
            let text = format!("R_S({}, τ; s = {s}) over {} places = {value:.12}", d.label(), params.len());
            let json = json!({
                "datum": d.label(),
                "places": qs,
                "weights": vecs_json(tau.weights()),
                "s": s,
                "value": value,
            });
            Ok(Report { text, json })
        }
        Command::Split { datum, q, values, sqrt_sign } => {
            let d = resolve_datum(datum)?;
            let dd = ctx.dual_data(&d)?;
            let q = parse_rational(q)?;
            let base: Vec<QuadraticExt> = parse_rationals(values)?.into_iter().map(QuadraticExt::rational).collect();
            let x = make_parameter(&dd, q.clone(), base)?;
            let root = QuadraticExt::sqrt(q);
            let sq = match sqrt_sign {
                Sign::Plus => root,
                Sign::Minus => root.neg(),
            };
            let split = split_by_sqrt(&x, &sq)?;
            let other = split_by_sqrt(&x, &sq.neg())?;
            let identity = other == epsilon_twist(&dd, &split);
            let differs = other != split;
            let text = format!(
                "{}: parameter {} split by √q = {sq}\n  classical parameter: {split}\n  with the other root: {other}\n  other root = ε-twist: {identity}; choice matters: {differs}",
                d.label(),
                x.point(),
            );
            let json = json!({
                "datum": d.label(),
                "parameter": show(x.point().values()),
                "sqrt": sq.to_string(),
                "split": show(split.values()),
                "split_other_root": show(other.values()),
                "hidden_sign_identity": identity,
                "sign_matters": differs,
            });
            Ok(Report { text, json })
        }
    }
}

fn rfactor_report(
    d: &RootDatum,
    tau: &DualRepresentation,
    x: &UnramifiedParameter<'_, BigRational>,
    f: &RFactor<BigRational>,
    s: Option<f64>,
) -> Result<Report, CliError> {
    let qf = Field::to_f64(x.q());
    let value = match s {
        Some(s) => Some(
            f.eval(qf, s)
                .ok_or_else(|| CliError::from(modlang::Error::Pole { place: format!("q = {}, s = {s}", x.q()) }))?,
        ),
        None => None,
    };
    let point: &TorusPoint<BigRational> = x.point();
    let mut text = format!(
        "{}: τ = {tau} (dim {}), parameter {point} (orbit representative {})\n  R = {f}\n  denominator coefficients in u = q^-s: [{}]",
        d.label(),
        tau.dim(),
        x.canonical().point(),
        show(&f.denominator()).join(", ")
    );
    if let (Some(s), Some(v)) = (s, value) {
        write!(text, "\n  R(s = {s}) = {v:.12}").unwrap();
    }
    let json = json!({
        "datum": d.label(),
        "weights": vecs_json(tau.weights()),
        "q": x.q().to_string(),
        "parameter": show(point.values()),
        "canonical_parameter": show(x.canonical().point().values()),
        "inverse_roots": show(&f.inverse_roots),
        "denominator": show(&f.denominator()),
        "degree": f.degree(),
        "s": s,
        "value": value,
    });
    Ok(Report { text, json })
}

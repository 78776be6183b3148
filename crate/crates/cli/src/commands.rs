use std::fs;
use std::io::Write;

use polybell_core::exact::{parse_rational, to_f64, Rational};
use polybell_core::numeric::{
    cesaro_pbell, dobinski_pbell, dobinski_pbell_poly, mc_moment_check, mgf_check, pmf_check,
    RngStream,
};
use polybell_core::pbell::{pbell_cross_check, pbell_number, pbell_poly};
use polybell_core::polybell::{polybell, polybell_pos};
use polybell_core::verify::{run_selected, SuiteConfig, VerifyError};
use polybell_core::TriangleCache;

use crate::table::{Table, TableRequest};
use crate::{
    CmdResult, Failure, NumericCommand, TableArgs, ValueArgs, ValueKind, VerifyArgs,
    EXIT_CHECK_FAILED, EXIT_OK,
};

fn exit_for(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn print_value(out: &mut Vec<u8>, v: &Rational, approx: bool) -> std::io::Result<()> {
    writeln!(out, "{v}")?;
    if approx {
        writeln!(out, "approx {}", to_f64(v))?;
    }
    Ok(())
}

pub(crate) fn cmd_value(a: &ValueArgs, out: &mut Vec<u8>) -> CmdResult {
    let cache = TriangleCache::global();
    let nonneg_p = || {
        usize::try_from(a.p)
            .map_err(|_| Failure::usage(format!("--p must be >= 0 for {:?}", a.kind)))
    };
    match a.kind {
        ValueKind::Pbell => {
            let p = nonneg_p()?;
            let v = if a.cross_check {
                pbell_cross_check(cache, a.n, p).map_err(|e| Failure::check(e.to_string()))?
            } else {
                pbell_number(cache, a.n, p, a.backend)
            };
            print_value(out, &v, a.approx)?;
        }
        ValueKind::Polybell => {
            let v = if a.p >= 0 && a.cross_check {
                let p = a.p as usize;
                pbell_cross_check(cache, a.n, p).map_err(|e| Failure::check(e.to_string()))?;
                polybell_pos(cache, a.n, p, a.backend)
            } else if a.p >= 0 {
                polybell_pos(cache, a.n, a.p as usize, a.backend)
            } else {
                polybell(cache, a.n, a.p).value
            };
            print_value(out, &v, a.approx)?;
        }
        ValueKind::PbellPoly => {
            let p = nonneg_p()?;
            if a.cross_check {
                pbell_cross_check(cache, a.n, p).map_err(|e| Failure::check(e.to_string()))?;
            }
            let poly = pbell_poly(cache, a.n, p);
            match &a.x {
                None => writeln!(out, "{poly}")?,
                Some(x) => {
                    let x = parse_rational(x).map_err(|e| Failure::usage(format!("--x: {e}")))?;
                    print_value(out, &poly.eval(&x), a.approx)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

pub(crate) fn cmd_table(a: &TableArgs, out: &mut Vec<u8>) -> CmdResult {
    let req = TableRequest {
        n_max: a.n_max,
        p_max: a.p_max,
        kind: a.kind,
        backend: a.backend,
    };
    let text = Table::compute(TriangleCache::global(), &req).render(a.format);
    match &a.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

pub(crate) fn cmd_verify(a: &VerifyArgs, out: &mut Vec<u8>) -> CmdResult {
    let cfg = SuiteConfig {
        nmax: a.nmax,
        pmax: a.pmax,
        order: a.order,
    };
    let reports = run_selected(TriangleCache::global(), &cfg, &a.only).map_err(|e| match e {
        VerifyError::UnknownIdentity(_) => Failure::usage(e.to_string()),
        other => Failure::check(other.to_string()),
    })?;
    for r in &reports {
        if a.text {
            writeln!(out, "{r}")?;
        } else {
            writeln!(out, "{}", r.to_json())?;
        }
    }
    Ok(exit_for(reports.iter().all(|r| r.passed())))
}

fn json_line<T: serde::Serialize>(out: &mut Vec<u8>, v: &T) -> std::io::Result<()> {
    serde_json::to_writer(&mut *out, v).map_err(std::io::Error::other)?;
    writeln!(out)
}

pub(crate) fn cmd_numeric(check: &NumericCommand, out: &mut Vec<u8>) -> CmdResult {
    let cache = TriangleCache::global();
    let positive = |name: &str, v: usize| {
        if v == 0 {
            Err(Failure::usage(format!("--{name} must be >= 1")))
        } else {
            Ok(v)
        }
    };
    let pass = match *check {
        NumericCommand::Dobinski { n, p, tol } => {
            let r = dobinski_pbell(cache, n, positive("p", p)?, tol);
            json_line(out, &r)?;
            r.pass
        }
        NumericCommand::DobinskiPoly { n, p, x, tol } => {
            let r = dobinski_pbell_poly(cache, n, positive("p", p)?, x, tol);
            json_line(out, &r)?;
            r.pass
        }
        NumericCommand::Cesaro {
            n,
            p,
            quad_points,
            tol,
        } => {
            positive("n", n)?;
            positive("p", p)?;
            positive("quad-points", quad_points)?;
            let r = cesaro_pbell(cache, n, p, quad_points, tol)
                .map_err(|e| Failure::check(e.to_string()))?;
            json_line(out, &r)?;
            r.pass
        }
        NumericCommand::Mc {
            n,
            p,
            x,
            samples,
            seed,
        } => {
            let r = mc_moment_check(
                cache,
                n,
                positive("p", p)?,
                x,
                positive("samples", samples as usize)? as u64,
                RngStream::new(seed),
            );
            json_line(out, &r)?;
            r.pass
        }
        NumericCommand::Mgf {
            p,
            t,
            samples,
            seed,
        } => {
            let r = mgf_check(
                positive("p", p)?,
                t,
                positive("samples", samples as usize)? as u64,
                RngStream::new(seed),
            );
            json_line(out, &r)?;
            r.pass()
        }
        NumericCommand::Pmf {
            p,
            k_max,
            samples,
            sigmas,
            seed,
        } => {
            let r = pmf_check(
                positive("p", p)?,
                k_max,
                positive("samples", samples as usize)? as u64,
                sigmas,
                RngStream::new(seed),
            );
            json_line(out, &r)?;
            r.rows.iter().all(|row| row.derived_pass)
        }
    };
    Ok(exit_for(pass))
}

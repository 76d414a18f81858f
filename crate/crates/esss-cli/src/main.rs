use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use esss::cli_io::suites::{self, all_pass, standard_fields};
use esss::cli_io::{
    compute, field_from_flags, page_markdown, parse_range, pi_cell, pi_markdown, render_svg, window, ChartSpec, PageSel,
};
use esss::emcoeffs::FieldId;
use esss::gradedalg::Window;
use esss::sliceassembly::Spectrum;
use esss::ssengine::cell_string;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "esss", version, about = "Effective slice spectral sequences for kq and L")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct FieldArgs {
    /// c, fq, qq, q2, r or q
    #[arg(long)]
    field: String,
    /// the prime power for fq and qq
    #[arg(long)]
    q: Option<u64>,
    /// odd primes tracked over the rationals, e.g. 3,5,7
    #[arg(long, value_delimiter = ',')]
    support: Vec<u32>,
    #[arg(long, value_enum)]
    spectrum: SpectrumArg,
    /// higher differential rule file (needed for L over r and q)
    #[arg(long)]
    rules: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpectrumArg {
    Kq,
    #[value(name = "L", alias = "l")]
    L,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Svg,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Oracles,
    Ddzero,
    Hasse,
    Bernoulli,
    Goldens,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a page (1, 2 or inf) on a window
    Compute {
        #[command(flatten)]
        field: FieldArgs,
        /// 1, 2 or inf
        #[arg(long, default_value = "2")]
        page: String,
        #[arg(long, default_value = "0..12", allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value = "0..12", allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value = "-4..8", allow_hyphen_values = true)]
        w: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// write here instead of standard output
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// The homotopy group in one stem and weight
    Pi {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, allow_hyphen_values = true)]
        stem: i32,
        #[arg(long, allow_hyphen_values = true)]
        weight: i32,
    },
    /// Run a verification suite
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
        /// largest k for the bernoulli suite
        #[arg(long, default_value_t = 64)]
        kmax: u64,
    },
}

fn spectrum(a: SpectrumArg) -> Spectrum {
    match a {
        SpectrumArg::Kq => Spectrum::Kq,
        SpectrumArg::L => Spectrum::L,
    }
}

fn field(a: &FieldArgs) -> Result<(FieldId, Spectrum, Option<String>)> {
    let f = field_from_flags(&a.field, a.q, &a.support)?;
    let rules = match &a.rules {
        Some(p) => Some(std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?),
        None => None,
    };
    Ok((f, spectrum(a.spectrum), rules))
}

fn range(name: &str, text: &str) -> Result<(i32, i32)> {
    parse_range(text).map_err(|e| anyhow::anyhow!("--{name}: {e}"))
}

fn run_compute(fa: &FieldArgs, page: &str, s: &str, f: &str, w: &str, format: Format) -> Result<String> {
    let (field, sp, rules) = field(fa)?;
    let sel = match page {
        "1" => PageSel::E1,
        "2" => PageSel::E2,
        "inf" => PageSel::Infinity,
        other => bail!("--page must be 1, 2 or inf, not {other:?}"),
    };
    let win = window(range("s", s)?, range("f", f)?, range("w", w)?)?;
    let c = compute(&field, sp, sel, win, rules.as_deref())?;
    let title = match sel {
        PageSel::E1 => format!("E1 of {sp} over {field}"),
        PageSel::E2 => format!("E2 of {sp} over {field}"),
        PageSel::Infinity => format!("E∞ of {sp} over {field}"),
    };
    Ok(match format {
        Format::Json => c.document.to_json(),
        Format::Svg => render_svg(&ChartSpec::for_page(&c.page, title), &c.page),
        Format::Md => match &c.pi {
            Some(t) => pi_markdown(t, &format!("homotopy of {sp} over {field}")),
            None => page_markdown(&c.page, &title),
        },
    })
}

fn run_check(suite: Suite, kmax: u64) -> Vec<suites::CheckLine> {
    match suite {
        Suite::Oracles => suites::oracles(-12, -4),
        Suite::Ddzero => suites::ddzero(Window::new((-4, 32), (0, 40), (-8, 36))),
        Suite::Hasse => suites::hasse(&[3, 5, 7], Window::new((-3, 16), (0, 20), (-10, 10))),
        Suite::Bernoulli => {
            let f = standard_fields();
            suites::bernoulli(kmax, &[f[0].clone(), f[1].clone(), f[2].clone(), f[7].clone()])
        }
        Suite::Goldens => suites::goldens(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res: Result<bool> = (|| match &cli.cmd {
        Cmd::Compute { field, page, s, f, w, format, output } => {
            let text = run_compute(field, page, s, f, w, *format)?;
            match output {
                Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display()))?,
                None => std::io::stdout().write_all(text.as_bytes())?,
            }
            Ok(true)
        }
        Cmd::Pi { field: fa, stem, weight } => {
            let (f, sp, rules) = field(fa)?;
            let cell = pi_cell(&f, sp, *stem, *weight, rules.as_deref())?;
            println!("{}", cell_string(&cell, false));
            Ok(true)
        }
        Cmd::Check { suite, kmax } => {
            let lines = run_check(*suite, *kmax);
            for l in &lines {
                println!("{}", l.render());
            }
            Ok(all_pass(&lines))
        }
    })();
    match res {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use diffca_core::eca::{eca_evolve, impulse_row, rule_table, Boundary};
use diffca_core::fixtures::{self, FIXTURE_IDS};
use diffca_core::{
    evolve, evolve_capped, highlight_pyramid, load_fixture, make_symmetric, parse_expression,
    render_comparison, render_eca, render_pyramid, Alignment, Comparison, Format, InputExpression,
    Palette, Pattern, RenderSpec,
};

#[derive(Debug, Parser)]
#[command(
    name = "diffca",
    version,
    about = "Absolute-difference cellular automaton"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evolve an input and render the pyramid.
    Run(RunArgs),
    /// Render an elementary cellular automaton diagram.
    Eca(EcaArgs),
    /// Render a fixture's highlighted pyramid next to a reference ECA diagram.
    Compare(CompareArgs),
    /// Re-derive the bundled reference evolution and check the fixtures.
    Selfcheck,
    /// List fixture ids and their expressions.
    Fixtures,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// ascii, pbm, pgm or svg
    #[arg(long, default_value = "ascii")]
    format: Format,
    /// Write the artifact here instead of standard output.
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Pixels per cell (default 1 for pbm/pgm, 10 for svg).
    #[arg(long)]
    cell_px: Option<usize>,
}

impl OutputArgs {
    fn spec(&self) -> Result<RenderSpec> {
        let cell_px = match self.cell_px {
            Some(0) => bail!("render: --cell-px must be at least 1"),
            Some(px) => px,
            None if self.format == Format::Svg => 10,
            None => 1,
        };
        Ok(RenderSpec::new(self.format).with_cell_px(cell_px))
    }
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("source").required(true).multiple(false))]
struct RunArgs {
    /// Input expression, e.g. "2-0-1-7".
    #[arg(long, short, group = "source")]
    input: Option<String>,
    /// File containing one expression.
    #[arg(long, short, group = "source")]
    file: Option<PathBuf>,
    /// Bundled fixture id (see `diffca fixtures`).
    #[arg(long, group = "source")]
    fixture: Option<String>,
    /// Pattern to highlight, e.g. "0-".
    #[arg(long, short)]
    pattern: Option<String>,
    /// Append the reversed input before evolving.
    #[arg(long)]
    symmetric: bool,
    #[arg(long)]
    max_generations: Option<usize>,
    /// centered or left
    #[arg(long, default_value = "centered")]
    align: Alignment,
    /// In ASCII output, draw unmatched cells as '.'.
    #[arg(long)]
    blank: bool,
    /// SVG color for highlighted cells.
    #[arg(long, default_value = "#000000")]
    on_color: String,
    /// SVG color for other cells.
    #[arg(long, default_value = "#ffffff")]
    off_color: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct EcaArgs {
    /// Wolfram rule number, 0-255.
    #[arg(long, allow_negative_numbers = true)]
    rule: i64,
    #[arg(long, default_value_t = 32)]
    generations: usize,
    /// Row width (default 2 * generations + 1).
    #[arg(long)]
    width: Option<usize>,
    /// zero or periodic
    #[arg(long, default_value = "zero")]
    boundary: Boundary,
    /// Explicit binary initial row, e.g. "0-1-1-0"; default is a centered single 1.
    #[arg(long)]
    initial: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct CompareArgs {
    /// a1 or a2
    #[arg(long)]
    fixture: String,
    #[arg(long, short)]
    pattern: String,
    #[arg(long, allow_negative_numbers = true)]
    rule: i64,
    #[arg(long, default_value = "zero")]
    boundary: Boundary,
    /// Generation lag between pyramid and diagram rows; by default lags 0-2 are all reported.
    #[arg(long)]
    lag: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

fn emit(bytes: &[u8], out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, bytes)
            .with_context(|| format!("output: cannot write {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(bytes)
                .context("output: cannot write to stdout")?;
            stdout.flush().context("output: cannot write to stdout")
        }
    }
}

fn parse_component(text: &str, what: &str) -> Result<InputExpression> {
    parse_expression(text).with_context(|| format!("parser: invalid {what} {text:?}"))
}

fn read_input(args: &RunArgs) -> Result<InputExpression> {
    if let Some(text) = &args.input {
        return parse_component(text, "input");
    }
    if let Some(path) = &args.file {
        let text = fs::read_to_string(path)
            .with_context(|| format!("input: cannot read {}", path.display()))?;
        return parse_expression(&text)
            .with_context(|| format!("parser: invalid expression in {}", path.display()));
    }
    let id = args
        .fixture
        .as_deref()
        .expect("clap enforces one input source");
    load_fixture(id).context("fixtures")
}

fn cmd_run(args: RunArgs) -> Result<()> {
    let mut input = read_input(&args)?;
    if args.symmetric {
        input = make_symmetric(&input);
    }
    let pattern = args
        .pattern
        .as_deref()
        .map(|s| parse_component(s, "pattern").map(Pattern::from))
        .transpose()?;

    let pyramid = evolve_capped(input.terms(), args.max_generations);
    let mask = pattern.as_ref().map(|s| highlight_pyramid(&pyramid, s));

    let palette = if mask.is_some() {
        Palette::Highlight {
            on: args.on_color.clone(),
            off: args.off_color.clone(),
        }
    } else {
        Palette::Grayscale
    };
    let spec = args
        .output
        .spec()?
        .with_alignment(args.align)
        .with_palette(palette)
        .with_blank_unmatched(args.blank);
    let bytes = render_pyramid(&pyramid, mask.as_ref(), &spec).context("render")?;
    emit(&bytes, args.output.out.as_deref())
}

fn cmd_eca(args: EcaArgs) -> Result<()> {
    let rule = rule_table(args.rule).context("eca")?;
    let initial = match &args.initial {
        Some(text) => parse_component(text, "initial row")?.into_row(),
        None => {
            let width = args
                .width
                .unwrap_or_else(|| args.generations.saturating_mul(2).saturating_add(1));
            impulse_row(width).context("eca")?
        }
    };
    let diagram = eca_evolve(&initial, &rule, args.generations, args.boundary).context("eca")?;
    emit(
        &render_eca(&diagram, &args.output.spec()?),
        args.output.out.as_deref(),
    )
}

fn cmd_compare(args: CompareArgs) -> Result<()> {
    if !matches!(args.fixture.as_str(), "a1" | "a2") {
        bail!("compare: fixture must be a1 or a2, got {:?}", args.fixture);
    }
    let input = load_fixture(&args.fixture).context("fixtures")?;
    let pattern = Pattern::from(parse_component(&args.pattern, "pattern")?);
    let rule = rule_table(args.rule).context("eca")?;
    let cmp =
        Comparison::build(input.terms(), &pattern, &rule, args.boundary, None).context("eca")?;

    emit(
        &render_comparison(&cmp, &args.output.spec()?),
        args.output.out.as_deref(),
    )?;

    if cmp.impulse.is_some() {
        let lags = match args.lag {
            Some(lag) => lag..=lag,
            None => 0..=2,
        };
        for lag in lags {
            let a = cmp.agreement(lag).expect("impulse present");
            eprintln!(
                "in-cone agreement (rule {}, lag {lag}): {:.6} ({}/{})",
                rule.number(),
                a.ratio(),
                a.matching,
                a.total
            );
        }
    } else {
        eprintln!("input is not a single impulse; no agreement ratio computed");
    }
    Ok(())
}

fn cmd_selfcheck() -> Result<()> {
    let mut failures = Vec::new();

    let pyramid = evolve(load_fixture("default-p")?.terms());
    let derived: Vec<String> = pyramid.rows().iter().map(ToString::to_string).collect();
    if derived != fixtures::DEFAULT_P_EVOLUTION {
        failures.push("default-p evolution differs from the bundled reference rows");
    }

    let a1 = load_fixture("a1")?;
    if a1.values().len() != 101 || fixtures::impulse_index(a1.values()) != Some(50) {
        failures.push("a1 is not a 101-cell impulse centered at index 50");
    }
    if make_symmetric(&load_fixture("p1")?) != load_fixture("p1-new")? {
        failures.push("p1-new is not p1 followed by its reverse");
    }
    if load_fixture("a2")?.values().len() != 67 {
        failures.push("a2 does not have 67 cells");
    }
    let cmp = Comparison::build(
        a1.terms(),
        &Pattern::new(vec![1])?,
        &rule_table(90)?,
        Boundary::ZeroPadded,
        None,
    )?;
    if !cmp.agreement(0).is_some_and(|a| a.is_exact()) {
        failures.push("a1 with pattern 1 does not match rule 90 in the light cone");
    }

    if failures.is_empty() {
        println!("selfcheck: ok ({} generations reproduced)", derived.len());
        Ok(())
    } else {
        bail!("selfcheck failed:\n  {}", failures.join("\n  "))
    }
}

fn cmd_fixtures() -> Result<()> {
    let mut out = String::new();
    for id in FIXTURE_IDS {
        out.push_str(&format!("{id}\t{}\n", load_fixture(id)?));
    }
    emit(out.as_bytes(), None)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Eca(args) => cmd_eca(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Selfcheck => cmd_selfcheck(),
        Command::Fixtures => cmd_fixtures(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

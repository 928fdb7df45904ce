use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use divide_knots::atlas::svg::{render_svg, SvgOptions};
use divide_knots::atlas::verify::{run, Suite, VerifyReport};
use divide_knots::atlas::{row_for, sweep, write_jsonl, AtlasRow, SweepSpec};
use divide_knots::berge::{delta_choice, record_for, BergeRecord, BergeType};
use divide_knots::braid::{column_braid, cp_braid, BraidWord};
use divide_knots::invar::{alexander_link, bennequin_genus, profile, AlexanderCaps};
use divide_knots::lshape::{relation_search, LRegion, Rect};
use divide_knots::sign::Sign;
use divide_knots::trace::{place, place_rect, trace, PlacedRegion};
use divide_knots::ttk::{ttk_braid, ttk_region, TwistedTorus};

#[derive(Parser)]
#[command(
    name = "dknot",
    version,
    about = "Divide-curve presentations, braids and invariants of lens-space surgery knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
}

#[derive(Args)]
struct KnotArgs {
    /// Knot type: III, IV, V or VI
    #[arg(long = "type")]
    knot_type: String,
    /// Sign ε, written 1 or -1
    #[arg(long, allow_negative_numbers = true)]
    eps: i64,
    /// Width parameter A
    #[arg(short = 'A', long = "big-a")]
    big_a: i64,
    /// Squares parameter k
    #[arg(short, long, default_value_t = 0)]
    k: i64,
    /// Twist parameter t
    #[arg(short, long, default_value_t = 0, allow_negative_numbers = true)]
    t: i64,
    /// Sign δ, written 1 or -1; defaults to the choice making coef positive
    #[arg(long, allow_negative_numbers = true)]
    delta: Option<i64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
}

#[derive(Args)]
struct SweepArgs {
    /// Ranges, e.g. "A=2..10,k=0..3,t=-2..2"
    #[arg(long)]
    grid: Option<String>,
    /// Comma-separated subset of III,IV,V,VI
    #[arg(long)]
    types: Option<String>,
    /// Output JSON-lines file
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct TraceArgs {
    /// L-shaped region a1,a2,b1,b2
    #[arg(long, value_delimiter = ',', conflicts_with = "rect")]
    region: Option<Vec<i64>>,
    /// Rectangle a,b
    #[arg(long, value_delimiter = ',')]
    rect: Option<Vec<i64>>,
    /// Write an SVG rendering to this path
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct BraidArgs {
    /// L-shaped region a1,a2,b1,b2
    #[arg(long, value_delimiter = ',')]
    region: Vec<i64>,
    /// Emit the column-by-column curve word instead of the sorted one
    #[arg(long)]
    columns: bool,
}

#[derive(Args)]
struct AlexArgs {
    /// Braid word, e.g. "W(5)^3 W(3)" or "s2 s1 S2"
    #[arg(long)]
    braid: String,
}

#[derive(Args)]
struct TtkArgs {
    #[arg(short)]
    p: i64,
    #[arg(short)]
    q: i64,
    #[arg(short)]
    r: i64,
    #[arg(short)]
    s: i64,
}

#[derive(Args)]
struct RelationsArgs {
    #[arg(long = "max-A", default_value_t = 10)]
    max_a: i64,
}

#[derive(Args)]
struct VerifyArgs {
    /// "all" or a comma-separated subset of
    /// berge,lshape,trace,braid-claims,invar-cross,ttk-audit,relations
    #[arg(long, default_value = "all")]
    suite: String,
    /// Report file
    #[arg(long, default_value = "verify_report.json")]
    report: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Derive one parameter tuple end to end
    Knot(KnotArgs),
    /// Walk a parameter grid and write JSON-lines rows
    Sweep(SweepArgs),
    /// Trace the divide curve of a region
    Trace(TraceArgs),
    /// Print the braid word of a region
    Braid(BraidArgs),
    /// Alexander polynomial of a braid closure
    Alex(AlexArgs),
    /// Twisted torus knot presentation
    Ttk(TtkArgs),
    /// List the cross-type single-move relations
    Relations(RelationsArgs),
    /// Run verification suites
    Verify(VerifyArgs),
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<divide_knots::berge::BergeError> for CliError {
    fn from(e: divide_knots::berge::BergeError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<divide_knots::lshape::LShapeError> for CliError {
    fn from(e: divide_knots::lshape::LShapeError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<divide_knots::trace::TraceError> for CliError {
    fn from(e: divide_knots::trace::TraceError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<divide_knots::braid::BraidError> for CliError {
    fn from(e: divide_knots::braid::BraidError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<divide_knots::invar::InvarError> for CliError {
    fn from(e: divide_knots::invar::InvarError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<divide_knots::ttk::TtkError> for CliError {
    fn from(e: divide_knots::ttk::TtkError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<divide_knots::atlas::AtlasError> for CliError {
    fn from(e: divide_knots::atlas::AtlasError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn parse_type(s: &str) -> Result<BergeType, CliError> {
    match s.to_ascii_uppercase().as_str() {
        "III" => Ok(BergeType::III),
        "IV" => Ok(BergeType::IV),
        "V" => Ok(BergeType::V),
        "VI" => Ok(BergeType::VI),
        other => Err(CliError::Input(format!(
            "unknown type {other:?} (expected III, IV, V or VI)"
        ))),
    }
}

fn parse_sign(value: i64, name: &str) -> Result<Sign, CliError> {
    match value {
        1 => Ok(Sign::Plus),
        -1 => Ok(Sign::Minus),
        other => Err(CliError::Input(format!("{name} must be 1 or -1, got {other}"))),
    }
}

fn parse_region(values: &[i64]) -> Result<LRegion, CliError> {
    let [a1, a2, b1, b2] = values else {
        return Err(CliError::Input(
            "expected four values a1,a2,b1,b2".to_string(),
        ));
    };
    Ok(LRegion::new(*a1, *a2, *b1, *b2)?)
}

fn print_row_table(record: &BergeRecord, row: &AtlasRow) {
    let p = record.params;
    println!("type      {}", p.knot_type);
    println!("delta     {:+}", p.delta.val());
    println!("epsilon   {:+}", p.epsilon.val());
    println!("A         {}", p.big_a);
    println!("k         {}", p.k);
    println!("t         {}", p.t);
    println!("a         {}", record.small_a);
    println!("l         {}", record.l);
    println!("B         {}", record.big_b);
    println!("b         {}", record.b);
    println!("coef      {}", record.coef);
    println!("region    {}", row.region);
    println!("area      {}", row.area);
    println!("crossings {}", row.double_points);
    println!("genus     {}", row.genus);
    println!("braid     {}", row.braid);
    match &row.alexander {
        Some(coeffs) => println!("alexander {coeffs:?}"),
        None => println!("alexander (skipped: braid above size caps)"),
    }
    println!(
        "checks    gap={} selector={} arc={} genus3={} coef>0={} window={}",
        row.checks.area_coef_gap,
        row.checks.gap_matches_selector,
        row.checks.immersed_arc,
        row.checks.genus_triple_match,
        row.checks.coef_positive,
        row.checks.gt_conjecture_window
    );
}

fn cmd_knot(args: &KnotArgs) -> Result<(), CliError> {
    let knot_type = parse_type(&args.knot_type)?;
    let eps = parse_sign(args.eps, "--eps")?;
    let delta = match args.delta {
        Some(d) => parse_sign(d, "--delta")?,
        None => delta_choice(eps, args.t),
    };
    let record = record_for(knot_type, delta, eps, args.big_a, args.k, args.t)?;
    let row = row_for(&record, AlexanderCaps::default())?;
    match args.format {
        OutputFormat::Json => {
            let json =
                serde_json::to_string_pretty(&row).map_err(|e| CliError::Input(e.to_string()))?;
            println!("{json}");
        }
        OutputFormat::Table => print_row_table(&record, &row),
    }
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), CliError> {
    let mut spec = match &args.grid {
        Some(grid) => SweepSpec::parse_grid(grid)?,
        None => SweepSpec::default(),
    };
    if let Some(types) = &args.types {
        spec.types = SweepSpec::parse_types(types)?;
    }
    let rows = sweep(&spec)?;
    write_jsonl(&args.out, &rows)?;
    let clean = rows
        .iter()
        .filter(|r| {
            r.checks.gap_matches_selector
                && r.checks.immersed_arc
                && r.checks.genus_triple_match
                && r.checks.coef_positive
        })
        .count();
    println!(
        "wrote {} rows to {} ({} pass all checks)",
        rows.len(),
        args.out.display(),
        clean
    );
    Ok(())
}

fn placed_from(args: &TraceArgs) -> Result<PlacedRegion, CliError> {
    match (&args.region, &args.rect) {
        (Some(region), None) => Ok(place(&parse_region(region)?)),
        (None, Some(rect)) => {
            let [a, b] = rect.as_slice() else {
                return Err(CliError::Input("expected two values a,b".to_string()));
            };
            Ok(place_rect(&Rect::new(*a, *b)?))
        }
        _ => Err(CliError::Input(
            "pass exactly one of --region or --rect".to_string(),
        )),
    }
}

fn cmd_trace(args: &TraceArgs) -> Result<(), CliError> {
    let placed = placed_from(args)?;
    let summary = trace(&placed)?;
    println!("arcs          {}", summary.arcs);
    println!("circles       {}", summary.circles);
    println!("double points {}", summary.double_point_count);
    println!("endpoints     {:?}", summary.endpoints);
    println!(
        "immersed arc  {}",
        divide_knots::trace::is_immersed_arc(&summary)
    );
    if let Some(path) = &args.svg {
        let svg = render_svg(&placed, &SvgOptions::default())?;
        std::fs::write(path, svg)?;
        println!("svg           {}", path.display());
    }
    Ok(())
}

fn cmd_braid(args: &BraidArgs) -> Result<(), CliError> {
    let region = parse_region(&args.region)?;
    let word = if args.columns {
        column_braid(&region)
    } else {
        cp_braid(&region)
    };
    println!("word   {}", word.to_macro_string());
    println!("index  {}", word.index());
    println!("length {}", word.len());
    if let Ok(genus) = bennequin_genus(&word) {
        println!("genus  {genus}");
    }
    Ok(())
}

fn cmd_alex(args: &AlexArgs) -> Result<(), CliError> {
    let word = BraidWord::parse(&args.braid)?;
    let components = divide_knots::braid::closure_components(&word);
    println!("components {components}");
    let poly = alexander_link(&word)?;
    let (lo, coeffs) = poly
        .to_i64_parts()
        .map_err(|e| CliError::Input(e.to_string()))?;
    println!("alexander  {coeffs:?} (lowest degree {lo})");
    println!("span       {}", poly.span());
    if components == 1 {
        let prof = profile(&word)?;
        println!("genus      {}", prof.genus);
        println!("det        {}", prof.determinant);
    }
    Ok(())
}

fn cmd_ttk(args: &TtkArgs) -> Result<(), CliError> {
    let knot = TwistedTorus::new(args.p, args.q, args.r, args.s)?;
    println!("knot   {knot}");
    let word = ttk_braid(&knot)?;
    println!("braid  {}", word.to_macro_string());
    if let Ok(genus) = bennequin_genus(&word) {
        println!("genus  {genus}");
    }
    match ttk_region(&knot) {
        Ok(region) => {
            println!("region {region}");
            let caps = AlexanderCaps::default();
            let region_word = cp_braid(&region);
            if caps.allows(&word) && caps.allows(&region_word) {
                let agree = divide_knots::invar::same_profile(&word, &region_word)?;
                println!("region presentation agrees: {agree}");
            }
        }
        Err(e) => println!("region (none: {e})"),
    }
    Ok(())
}

fn cmd_relations(args: &RelationsArgs) -> Result<(), CliError> {
    if args.max_a < 2 {
        return Err(CliError::Input("--max-A must be at least 2".to_string()));
    }
    let mut found = 0usize;
    for a in 2..=args.max_a {
        for k in 0..=3i64 {
            let Ok(src) = record_for(BergeType::III, Sign::Minus, Sign::Plus, a, 0, 0) else {
                continue;
            };
            let dst = if a == 2 {
                record_for(BergeType::V, Sign::Plus, Sign::Minus, 3, k, 0)
            } else {
                record_for(BergeType::IV, Sign::Plus, Sign::Minus, 2 * a - 1, k, 0)
            };
            if let Ok(dst) = dst {
                if let Some(m) = relation_search(&src, &dst) {
                    let p = dst.params;
                    println!(
                        "K_III(-1,+1,{a},0,0) -> K_{}({:+},{:+},{},{},0): {m}",
                        p.knot_type,
                        p.delta.val(),
                        p.epsilon.val(),
                        p.big_a,
                        p.k
                    );
                    found += 1;
                }
            }
        }
    }
    for a in 2..=args.max_a {
        for k in 0..=3i64 {
            let Ok(src) = record_for(BergeType::III, Sign::Plus, Sign::Minus, a, 0, 0) else {
                continue;
            };
            let Ok(dst) = record_for(BergeType::IV, Sign::Minus, Sign::Plus, 2 * a + 1, k, 0)
            else {
                continue;
            };
            if let Some(m) = relation_search(&src, &dst) {
                let p = dst.params;
                println!(
                    "K_III(+1,-1,{a},0,0) -> K_{}({:+},{:+},{},{},0): {m}",
                    p.knot_type,
                    p.delta.val(),
                    p.epsilon.val(),
                    p.big_a,
                    p.k
                );
                found += 1;
            }
        }
    }
    println!("{found} relations found");
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<VerifyReport, CliError> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        args.suite
            .split(',')
            .map(|s| s.trim().parse().map_err(|e: divide_knots::atlas::AtlasError| {
                CliError::Input(e.to_string())
            }))
            .collect::<Result<_, _>>()?
    };
    let report = run(&suites);
    for suite in &report.suites {
        let status = if suite.failed == 0 { "ok" } else { "FAILED" };
        print!(
            "{:<14} {:>6} passed {:>4} failed",
            suite.suite, suite.passed, suite.failed
        );
        if suite.open_questions > 0 {
            print!(" {:>3} open questions", suite.open_questions);
        }
        println!("  [{status}]");
        for failure in &suite.failures {
            println!("    {failure}");
        }
    }
    let json = serde_json::to_string_pretty(&report).map_err(|e| CliError::Input(e.to_string()))?;
    std::fs::write(&args.report, json)?;
    println!("report written to {}", args.report.display());
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Knot(args) => cmd_knot(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Trace(args) => cmd_trace(args),
        Command::Braid(args) => cmd_braid(args),
        Command::Alex(args) => cmd_alex(args),
        Command::Ttk(args) => cmd_ttk(args),
        Command::Relations(args) => cmd_relations(args),
        Command::Verify(args) => {
            return match cmd_verify(args) {
                Ok(report) if report.ok => ExitCode::SUCCESS,
                Ok(_) => ExitCode::from(1),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            };
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

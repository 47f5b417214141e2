//! The `taxisect` command line.
//!
//! Exit status is 0 on success, 1 when a script assertion fails and 2 for
//! every kind of error (usage, parse, runtime, I/O).

use std::fs;
use std::io::{self, IsTerminal, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use taxisect_core::angles::{measure_angle, Angle};
use taxisect_core::constructions::{Primitive, StepKind, TraceStep};
use taxisect_core::{nsect_segment, section_angle, verify_trace, ConstructionTrace, Direction, Point, Rational};

use crate::export::{emit_json, emit_svg, figure, scene_from_trace, to_canonical_string, ToJson, FIGURES};
use crate::script;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "taxisect", version, about = "Exact taxicab constructions: segment and angle n-section")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a .taxi construction script.
    Run(RunArgs),
    /// Split the segment AB into n equal parts; prints the first division point C.
    Nsect(NsectArgs),
    /// Split an angle into n equal angles.
    Section(SectionArgs),
    /// Print the t-radian measure of an angle.
    Measure(MeasureArgs),
    /// Write one of the built-in figures as SVG.
    RenderDemo(RenderDemoArgs),
}

#[derive(Debug, Args)]
pub struct RunArgs {
    pub script: PathBuf,
    /// Write the final scene as SVG.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Write bindings, scene and assertion results as JSON.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Only report failures and errors.
    #[arg(long, short)]
    pub quiet: bool,
}

#[derive(Debug, Args)]
pub struct NsectArgs {
    #[arg(long, value_name = "X,Y", value_parser = parse_point, allow_hyphen_values = true)]
    pub a: Point,
    #[arg(long, value_name = "X,Y", value_parser = parse_point, allow_hyphen_values = true)]
    pub b: Point,
    #[arg(long, short)]
    pub n: u32,
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Print the verified construction steps.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct AngleArgs {
    #[arg(long, value_name = "X,Y", value_parser = parse_point, allow_hyphen_values = true, default_value = "0,0")]
    pub vertex: Point,
    /// Direction of the first side.
    #[arg(long, value_name = "X,Y", value_parser = parse_direction, allow_hyphen_values = true)]
    pub d1: Direction,
    /// Direction of the second side.
    #[arg(long, value_name = "X,Y", value_parser = parse_direction, allow_hyphen_values = true)]
    pub d2: Direction,
}

impl AngleArgs {
    fn angle(&self) -> Angle {
        Angle::new(self.vertex.clone(), self.d1.clone(), self.d2.clone())
    }
}

#[derive(Debug, Args)]
pub struct SectionArgs {
    #[command(flatten)]
    pub angle: AngleArgs,
    #[arg(long, short)]
    pub n: u32,
    /// Radius of the taxicab circle used by the construction.
    #[arg(long, value_parser = parse_rational, default_value = "1")]
    pub radius: Rational,
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[command(flatten)]
    pub angle: AngleArgs,
}

#[derive(Debug, Args)]
pub struct RenderDemoArgs {
    #[arg(long, value_name = "NAME")]
    pub figure: String,
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse().map_err(|e| format!("`{s}`: {e}"))
}

fn parse_point(s: &str) -> Result<Point, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("`{s}`: expected X,Y"))?;
    Ok(Point::new(parse_rational(x)?, parse_rational(y)?))
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    let p = parse_point(s)?;
    Direction::new(p.x, p.y).map_err(|e| format!("`{s}`: {e}"))
}

/// Error text, already formatted for the user.
#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure(e.to_string())
    }
}

struct Out<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    colour: bool,
}

impl Out<'_> {
    fn paint(&self, code: &str, text: &str) -> String {
        if self.colour {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))
}

/// Colour is used only when stderr is a terminal and `TAXISECT_NO_COLOR`
/// is unset.
pub fn colour_enabled() -> bool {
    std::env::var_os("TAXISECT_NO_COLOR").is_none() && io::stderr().is_terminal()
}

/// Runs a parsed command line, returning the process exit status.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write, colour: bool) -> i32 {
    let mut o = Out { out, err, colour };
    let result = match cli.command {
        Command::Run(args) => cmd_run(&args, &mut o),
        Command::Nsect(args) => cmd_nsect(&args, &mut o),
        Command::Section(args) => cmd_section(&args, &mut o),
        Command::Measure(args) => cmd_measure(&args, &mut o),
        Command::RenderDemo(args) => cmd_render_demo(&args),
    };
    match result {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(o.err, "{}: {msg}", o.paint("1;31", "error"));
            EXIT_ERROR
        }
    }
}

fn cmd_run(args: &RunArgs, o: &mut Out) -> Result<i32, Failure> {
    let name = args.script.display();
    let source = fs::read_to_string(&args.script).map_err(|e| Failure(format!("cannot read {name}: {e}")))?;
    let ex = script::run(&source).map_err(|e| Failure(format!("{name}:{e}")))?;

    let base = args.script.parent().unwrap_or(Path::new(""));
    for r in &ex.renders {
        write_file(&base.join(&r.path), &emit_svg(&r.scene))?;
    }
    for d in &ex.dumps {
        write!(o.out, "{}", emit_json(d))?;
    }
    if let Some(path) = &args.svg {
        write_file(path, &emit_svg(&ex.scene))?;
    }
    if let Some(path) = &args.json {
        write_file(path, &emit_json(&ex))?;
    }

    for f in &ex.failures {
        writeln!(o.err, "{}:{} {}", name, f, o.paint("31", "FAILED"))?;
    }
    if !args.quiet {
        let status = if ex.passed() { o.paint("32", "ok") } else { o.paint("31", "FAILED") };
        writeln!(o.out, "{name}: {} assertion(s), {} failed: {status}", ex.assertions, ex.failures.len())?;
    }
    Ok(if ex.passed() { EXIT_OK } else { EXIT_ASSERTION })
}

fn describe_step(i: usize, step: &TraceStep) -> String {
    let inputs = match &step.kind {
        StepKind::PlacePoint(_) => String::new(),
        StepKind::DrawCircle { center, through } => format!("center {center}, through {through}"),
        StepKind::DrawLine { from, to } => format!("{from} -> {to}"),
        StepKind::IntersectLineCircle { line, circle, pick } => format!("line {line}, circle {circle}, {pick:?} hit"),
        StepKind::IntersectLines { first, second } => format!("{first} x {second}"),
        StepKind::TakeCircleVertex { circle, corner } => format!("circle {circle}, {corner:?} corner"),
        StepKind::MarkResult { point } => format!("{point}"),
    };
    let output = match &step.output {
        Primitive::Point(p) => p.to_string(),
        Primitive::Line(l) => l.line.to_string(),
        Primitive::Circle(c) => c.to_string(),
    };
    let label = step.label.as_deref().map(|l| format!("  [{l}]")).unwrap_or_default();
    format!("{i:>3}  {:<20} {inputs:<36} = {output}{label}", step.kind.name())
}

fn print_trace(trace: &ConstructionTrace, o: &mut Out) -> Result<(), Failure> {
    let verdict = verify_trace(trace)?;
    for (i, step) in trace.steps.iter().enumerate() {
        writeln!(o.out, "{}", describe_step(i, step))?;
    }
    if verdict.is_verified() {
        writeln!(o.out, "{} steps replayed: {}", trace.steps.len(), o.paint("32", "verified"))?;
        Ok(())
    } else {
        Err(Failure(format!("trace does not verify: {verdict:?}")))
    }
}

fn cmd_nsect(args: &NsectArgs, o: &mut Out) -> Result<i32, Failure> {
    let ns = nsect_segment(&args.a, &args.b, args.n)?;
    writeln!(o.out, "C = {}", ns.point)?;
    if args.trace {
        print_trace(&ns.trace, o)?;
    }
    if let Some(path) = &args.svg {
        write_file(path, &emit_svg(&scene_from_trace(&ns.trace)?))?;
    }
    if let Some(path) = &args.json {
        let doc = json!({
            "env": { "A": args.a.to_json(), "B": args.b.to_json(), "C": ns.point.to_json(), "n": args.n },
            "trace": ns.trace.to_json(),
        });
        write_file(path, &to_canonical_string(&doc))?;
    }
    Ok(EXIT_OK)
}

fn cmd_section(args: &SectionArgs, o: &mut Out) -> Result<i32, Failure> {
    let angle = args.angle.angle();
    let s = section_angle(&angle, args.n, &args.radius)?;
    let total = measure_angle(&angle);
    writeln!(o.out, "measure = {total}")?;
    writeln!(o.out, "each = {}", &total / Rational::from(args.n as i64))?;
    for (k, (ray, t)) in s.rays.iter().zip(&s.params).enumerate() {
        let through = angle.vertex.translate(&ray.dir, &Rational::one());
        writeln!(o.out, "ray {} through {through} (t = {t})", k + 1)?;
    }
    if args.trace {
        match &s.trace {
            Some(trace) => print_trace(trace, o)?,
            None => writeln!(o.out, "no construction: the sides cut different edges of the circle")?,
        }
    }
    if let Some(path) = &args.svg {
        let scene = match &s.trace {
            Some(trace) => scene_from_trace(trace)?,
            None => {
                use crate::export::{Item, Scene, Shape, Style};
                let mut scene = Scene::new();
                let circle = taxisect_core::TaxicabCircle::new(angle.vertex.clone(), args.radius.clone())?;
                scene.push(Item::new(Shape::Circle(circle), Style::THIN));
                for d in [&angle.side1, &angle.side2] {
                    scene.push(Item::new(
                        Shape::Ray(taxisect_core::Ray::new(angle.vertex.clone(), d.clone())),
                        Style::REGULAR,
                    ));
                }
                for r in &s.rays {
                    scene.push(Item::new(Shape::Ray(r.clone()), Style::AUXILIARY));
                }
                scene
            }
        };
        write_file(path, &emit_svg(&scene))?;
    }
    if let Some(path) = &args.json {
        let doc = json!({
            "measure": total.to_json(),
            "rays": s.rays.iter().map(ToJson::to_json).collect::<Vec<_>>(),
            "params": s.params.iter().map(|t| t.value().to_json()).collect::<Vec<_>>(),
            "trace": s.trace.as_ref().map(ToJson::to_json),
        });
        write_file(path, &to_canonical_string(&doc))?;
    }
    Ok(EXIT_OK)
}

fn cmd_measure(args: &MeasureArgs, o: &mut Out) -> Result<i32, Failure> {
    writeln!(o.out, "{}", measure_angle(&args.angle.angle()))?;
    Ok(EXIT_OK)
}

fn cmd_render_demo(args: &RenderDemoArgs) -> Result<i32, Failure> {
    let scene = figure(&args.figure)
        .map_err(|_| Failure(format!("unknown figure `{}`; valid names: {}", args.figure, FIGURES.join(", "))))?;
    write_file(&args.out, &emit_svg(&scene))?;
    Ok(EXIT_OK)
}

//! Run configuration and command dispatch.
//!
//! A run is described by a [`RunConfig`]: which command, which prime and
//! level, an optional window override, output format, and destination.
//! Configs arrive from command-line flags, from a JSON file
//! ([`PartialConfig::from_json_file`]), or both; on conflict the flags win
//! field by field ([`PartialConfig::overlay`]).
//!
//! [`execute`] turns a resolved config into its output text (and, when an
//! output path is set, the file payload). All output is assembled
//! single-threaded from ordered containers, so identical configs produce
//! identical bytes; the page-turning underneath may parallelize freely
//! without affecting that.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::chart::chart_from_pages;
use crate::picard;
use crate::presets::{
    self, build_preset, check_no_late_targets, degree_form_check, necklace_count, sparsity_check,
    HeightContext, Level,
};
use crate::ranges::{self, simulate};
use crate::sseq::PageWindow;
use crate::{Error, Result};

/// The six commands of the tool.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    RingBasis,
    SsRun,
    VanishingLine,
    PicardBound,
    Dims,
    Selftest,
}

impl Command {
    pub fn parse(tag: &str) -> Result<Command> {
        match tag {
            "ring-basis" => Ok(Command::RingBasis),
            "ss-run" => Ok(Command::SsRun),
            "vanishing-line" => Ok(Command::VanishingLine),
            "picard-bound" => Ok(Command::PicardBound),
            "dims" => Ok(Command::Dims),
            "selftest" => Ok(Command::Selftest),
            other => Err(Error::Config(format!("unknown command '{}'", other))),
        }
    }
}

impl std::fmt::Display for Command {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self {
            Command::RingBasis => "ring-basis",
            Command::SsRun => "ss-run",
            Command::VanishingLine => "vanishing-line",
            Command::PicardBound => "picard-bound",
            Command::Dims => "dims",
            Command::Selftest => "selftest",
        };
        write!(f, "{}", tag)
    }
}

/// Output format for commands that can draw.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    #[default]
    Table,
    AsciiChart,
    Svg,
}

impl OutputFormat {
    pub fn parse(tag: &str) -> Result<OutputFormat> {
        match tag {
            "table" => Ok(OutputFormat::Table),
            "ascii-chart" => Ok(OutputFormat::AsciiChart),
            "svg" => Ok(OutputFormat::Svg),
            other => Err(Error::Config(format!(
                "unknown format '{}' (expected table, ascii-chart, or svg)",
                other
            ))),
        }
    }
}

/// A config as read from flags or a file: everything optional, merged by
/// [`PartialConfig::overlay`] before resolution.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields, default)]
pub struct PartialConfig {
    pub command: Option<String>,
    pub prime: Option<u32>,
    /// Accepted under either name; `--group` is the flag alias.
    pub level: Option<String>,
    pub group: Option<String>,
    pub inverted: Option<bool>,
    pub s: Option<i64>,
    pub t: Option<i64>,
    /// smin, smax, tmin, tmax.
    pub window: Option<[i64; 4]>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
}

impl PartialConfig {
    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read config {}: {}", path.display(), e)))?;
        serde_json::from_str(&text)
            .map_err(|e| Error::Config(format!("bad config {}: {}", path.display(), e)))
    }

    /// Field-by-field merge; values present in `flags` win.
    pub fn overlay(file: PartialConfig, flags: PartialConfig) -> PartialConfig {
        PartialConfig {
            command: flags.command.or(file.command),
            prime: flags.prime.or(file.prime),
            level: flags.level.or(file.level),
            group: flags.group.or(file.group),
            inverted: flags.inverted.or(file.inverted),
            s: flags.s.or(file.s),
            t: flags.t.or(file.t),
            window: flags.window.or(file.window),
            format: flags.format.or(file.format),
            out: flags.out.or(file.out),
            seed: flags.seed.or(file.seed),
        }
    }
}

/// Parses the `--window smin,smax,tmin,tmax` flag payload.
pub fn parse_window_spec(text: &str) -> Result<[i64; 4]> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(Error::Config(format!(
            "window must be smin,smax,tmin,tmax (got '{}')",
            text
        )));
    }
    let mut out = [0i64; 4];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| Error::Config(format!("bad window coordinate '{}'", part)))?;
    }
    Ok(out)
}

/// A fully resolved run.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub prime: u32,
    pub level: Option<Level>,
    pub inverted: bool,
    pub s: Option<i64>,
    pub t: Option<i64>,
    pub window: Option<[i64; 4]>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

impl RunConfig {
    /// Validates and defaults a merged partial config. The prime must be an
    /// odd prime; the level may be given as `level` or `group`.
    pub fn resolve(partial: PartialConfig) -> Result<RunConfig> {
        let command = Command::parse(
            partial
                .command
                .as_deref()
                .ok_or_else(|| Error::Config("no command given".to_string()))?,
        )?;
        let prime = match command {
            // dims and selftest default to the smallest prime the Picard
            // pipeline supports; everything else must say which prime.
            Command::Dims | Command::Selftest => partial.prime.unwrap_or(5),
            _ => partial
                .prime
                .ok_or_else(|| Error::Config("--prime is required".to_string()))?,
        };
        if prime == 2 {
            return Err(Error::Config("the prime must be odd".to_string()));
        }
        let level = match (&partial.level, &partial.group) {
            (Some(l), _) => Some(Level::parse(l)?),
            (None, Some(g)) => Some(Level::parse(g)?),
            (None, None) => None,
        };
        let format = match partial.format.as_deref() {
            Some(tag) => OutputFormat::parse(tag)?,
            None => OutputFormat::Table,
        };
        Ok(RunConfig {
            command,
            prime,
            level,
            inverted: partial.inverted.unwrap_or(false),
            s: partial.s,
            t: partial.t,
            window: partial.window,
            format,
            out: partial.out,
            seed: partial.seed.unwrap_or(0),
        })
    }

    fn require_level(&self) -> Result<Level> {
        self.level
            .ok_or_else(|| Error::Config("--level (or --group) is required".to_string()))
    }
}

/// What a command produced: text for stdout and, when an output path was
/// configured, the payload to write there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub artifact: Option<(PathBuf, String)>,
}

impl CommandOutput {
    fn text(stdout: String) -> CommandOutput {
        CommandOutput {
            stdout,
            artifact: None,
        }
    }
}

/// Runs one resolved config.
pub fn execute(config: &RunConfig) -> Result<CommandOutput> {
    match config.command {
        Command::RingBasis => cmd_ring_basis(config),
        Command::SsRun => cmd_ss_run(config),
        Command::VanishingLine => cmd_vanishing_line(config),
        Command::PicardBound => cmd_picard_bound(config),
        Command::Dims => cmd_dims(config),
        Command::Selftest => cmd_selftest(config),
    }
}

fn only_tables(config: &RunConfig) -> Result<()> {
    if config.format != OutputFormat::Table {
        return Err(Error::Config(format!(
            "command {} only emits tables; charts come from ss-run",
            config.command
        )));
    }
    Ok(())
}

fn cmd_ring_basis(config: &RunConfig) -> Result<CommandOutput> {
    only_tables(config)?;
    let level = config.require_level()?;
    let (s, t) = match (config.s, config.t) {
        (Some(s), Some(t)) => (s, t),
        _ => return Err(Error::Config("ring-basis needs --s and --t".to_string())),
    };
    let preset = build_preset(config.prime, level, config.inverted)?;
    let basis = preset.presentation.basis_in_bidegree(s, t);
    let mut out = String::new();
    out.push_str(&format!(
        "ring basis: level {}, p = {}, bidegree (s, t) = ({}, {}){}\n",
        level,
        config.prime,
        s,
        t,
        if config.inverted { ", beta inverted" } else { "" }
    ));
    for (i, m) in basis.iter().enumerate() {
        out.push_str(&format!(
            "{:>4}  {}\n",
            i + 1,
            preset.presentation.format_monomial(m)
        ));
    }
    out.push_str(&format!("dimension: {}\n", basis.len()));
    Ok(CommandOutput::text(out))
}

fn resolve_window(config: &RunConfig, ctx: &HeightContext) -> Result<PageWindow> {
    let default = presets::default_window(ctx);
    match config.window {
        None => Ok(default),
        Some([s_min, s_max, t_min, t_max]) => {
            let margin = 2 * ctx.n * ctx.n + 1;
            let window = PageWindow::new(s_min, s_max, t_min, t_max, margin)?;
            // Claims are asserted on the interior, so an override may only
            // grow the region: it must contain the default interior.
            let (ds0, ds1) = default.interior_s();
            let (dt0, dt1) = default.interior_t();
            if s_min > ds0 || s_max < ds1 || t_min > dt0 || t_max < dt1 {
                return Err(Error::Config(format!(
                    "window override must contain the default interior s in [{}, {}], t in [{}, {}]",
                    ds0, ds1, dt0, dt1
                )));
            }
            Ok(window)
        }
    }
}

fn cmd_ss_run(config: &RunConfig) -> Result<CommandOutput> {
    let level = config.require_level()?;
    let ctx = HeightContext::new(config.prime)?;
    let preset = build_preset(config.prime, level, config.inverted)?;
    let window = resolve_window(config, &ctx)?;
    let mut ss = preset.spectral_sequence(window)?;
    let settled = ss.settled_page();
    ss.compute_through(settled)?;

    let mut pages = vec![2u32];
    pages.extend(ss.rule_pages());
    pages.push(settled);
    pages.dedup();

    let title = format!(
        "spectral sequence: level {}, p = {}{}",
        level,
        config.prime,
        if config.inverted { ", beta inverted" } else { "" }
    );

    let payload = match config.format {
        OutputFormat::Table => {
            let mut out = String::new();
            out.push_str(&title);
            out.push('\n');
            out.push_str(&format!(
                "window: s in [{}, {}], t in [{}, {}], margin {}\n",
                window.s_min, window.s_max, window.t_min, window.t_max, window.margin
            ));
            let (is0, is1) = window.interior_s();
            let (it0, it1) = window.interior_t();
            out.push_str(&format!(
                "interior: s in [{}, {}], t in [{}, {}]\n",
                is0, is1, it0, it1
            ));
            for &page in &pages {
                let dims = ss.interior_dims(page)?;
                let spots = dims.values().filter(|&&d| d > 0).count();
                let total: usize = dims.values().sum();
                if total == 0 {
                    out.push_str(&format!("page {:>3}: interior identically zero\n", page));
                } else {
                    out.push_str(&format!(
                        "page {:>3}: interior dimension {} across {} spots\n",
                        page, total, spots
                    ));
                }
            }
            out
        }
        OutputFormat::AsciiChart => chart_from_pages(&mut ss, &pages, &title)?.to_ascii(),
        OutputFormat::Svg => chart_from_pages(&mut ss, &pages, &title)?.to_svg(),
    };

    match &config.out {
        Some(path) => Ok(CommandOutput {
            stdout: format!("wrote {}\n", path.display()),
            artifact: Some((path.clone(), payload)),
        }),
        None => Ok(CommandOutput::text(payload)),
    }
}

fn cmd_vanishing_line(config: &RunConfig) -> Result<CommandOutput> {
    only_tables(config)?;
    let level = config.require_level()?;
    let line = ranges::vanishing_line(config.prime, level)?;
    let mut out = String::new();
    out.push_str(&format!(
        "vanishing line: level {}, p = {}\n",
        level, config.prime
    ));
    out.push_str(&format!("page {}, s = {}\n", line.page, line.line));
    out.push_str("derivation (onto/iso thresholds per page):\n");
    for bound in &line.trace {
        out.push_str(&format!(
            "  page {:>3}: onto from s >= {}, iso from s >= {}\n",
            bound.page, bound.onto_from, bound.iso_from
        ));
    }
    Ok(CommandOutput::text(out))
}

fn cmd_picard_bound(config: &RunConfig) -> Result<CommandOutput> {
    only_tables(config)?;
    let level = config.require_level()?;
    let report = picard::exotic_bound_report(config.prime, level)?;
    Ok(CommandOutput::text(report.to_string()))
}

fn cmd_dims(config: &RunConfig) -> Result<CommandOutput> {
    only_tables(config)?;
    let primes: Vec<u32> = match config.prime {
        // The default prime expands to the whole table the diagonal
        // dimension story is about; any other prime gives a single row.
        5 => vec![5, 7, 11],
        p => vec![p],
    };
    let mut out = String::new();
    out.push_str("level-N ring dimension at (2n+1, 2n) vs necklace count\n");
    for p in primes {
        let ctx = HeightContext::new(p)?;
        let n = ctx.n;
        let preset = build_preset(p, Level::N, false)?;
        let dim = preset.presentation.dimension(2 * n + 1, 2 * n);
        let necklaces = necklace_count(n as u32)?;
        out.push_str(&format!(
            "p = {:>2}  n = {:>2}  dimension {:>3}  necklaces {:>3}  {}\n",
            p,
            n,
            dim,
            necklaces,
            if dim as u64 == necklaces {
                "agree"
            } else {
                "DIFFER"
            }
        ));
    }
    Ok(CommandOutput::text(out))
}

fn cmd_selftest(config: &RunConfig) -> Result<CommandOutput> {
    only_tables(config)?;
    let mut out = String::new();
    out.push_str("selftest\n");

    // Ring dimensions against the independent necklace oracle.
    for (p, want) in [(5u32, 4u64), (7, 8), (11, 56)] {
        let ctx = HeightContext::new(p)?;
        let preset = build_preset(p, Level::N, false)?;
        let dim = preset.presentation.dimension(2 * ctx.n + 1, 2 * ctx.n) as u64;
        let necklaces = necklace_count(ctx.n as u32)?;
        if dim != want || necklaces != want {
            return Err(Error::InternalCheck(format!(
                "dimension table broke at p = {}: dim {}, necklaces {}, want {}",
                p, dim, necklaces, want
            )));
        }
    }
    out.push_str("PASS dimensions: (2n+1, 2n) diagonal = 4 / 8 / 56 at p = 5 / 7 / 11\n");

    // Full collapse of the beta-inverted presets at p = 3.
    for level in [Level::F, Level::N, Level::G] {
        let preset = build_preset(3, level, true)?;
        let mut ss = preset.spectral_sequence(preset.default_window())?;
        let settled = ss.settled_page();
        ss.compute_through(settled)?;
        let late_total: usize = ss.interior_dims(settled - 1)?.values().sum();
        let final_total: usize = ss.interior_dims(settled)?.values().sum();
        if final_total != 0 || late_total == 0 {
            return Err(Error::InternalCheck(format!(
                "level {} at p = 3: settled interior dimension {}, last live page {}",
                level, final_total, late_total
            )));
        }
    }
    out.push_str("PASS collapse: inverted F/N/G at p = 3 vanish exactly on the settled page\n");

    // Vanishing lines.
    let g3 = ranges::vanishing_line(3, Level::G)?;
    let n5 = ranges::vanishing_line(5, Level::N)?;
    if (g3.page, g3.line) != (10, 13) || (n5.page, n5.line) != (34, 37) {
        return Err(Error::InternalCheck(format!(
            "vanishing lines drifted: G/3 -> ({}, {}), N/5 -> ({}, {})",
            g3.page, g3.line, n5.page, n5.line
        )));
    }
    out.push_str("PASS vanishing lines: (page 10, s = 13) at p = 3 level G; (34, 37) at p = 5 level N\n");

    // Sparsity and degree-form hypotheses on the shipped presets.
    for p in [3u32, 5] {
        for level in [Level::F, Level::N, Level::G] {
            let preset = build_preset(p, level, true)?;
            if !sparsity_check(&preset, &preset.default_window()) {
                return Err(Error::InternalCheck(format!(
                    "sparsity failed for level {} at p = {}",
                    level, p
                )));
            }
            if matches!(level, Level::N | Level::G)
                && !degree_form_check(&preset, &preset.default_window())?
            {
                return Err(Error::InternalCheck(format!(
                    "degree form failed for level {} at p = {}",
                    level, p
                )));
            }
        }
    }
    out.push_str("PASS sparsity and degree form on all default windows, p in {3, 5}\n");

    // Late-target certificate.
    for p in [5u32, 7] {
        if !check_no_late_targets(p)? {
            return Err(Error::InternalCheck(format!(
                "late-target certificate failed at p = {}",
                p
            )));
        }
    }
    out.push_str("PASS no-late-targets certificate at p in {5, 7}\n");

    // Picard reports.
    let n5 = picard::exotic_bound_report(5, Level::N)?;
    let g5 = picard::exotic_bound_report(5, Level::G)?;
    let g7 = picard::exotic_bound_report(7, Level::G)?;
    if n5.degrees() != vec![9]
        || n5.order_bound() != Some((5, 4))
        || g5.degrees() != vec![9]
        || g5.order_bound().is_some()
        || g7.degrees() != vec![13, 25]
    {
        return Err(Error::InternalCheck("Picard reports drifted".to_string()));
    }
    out.push_str("PASS Picard reports: N/5 = [9] at 5^4; G/5 = [9] unknown; G/7 = [13, 25]\n");

    // Randomized check of the range-propagation calculus.
    let sizes = simulate::SimulationSizes::default();
    let suite = simulate::simulate_suite(config.seed, 48, &sizes)?;
    if let Some((seed, violation)) = suite.first_violation {
        return Err(Error::InternalCheck(format!(
            "range propagation violated at seed {}: {:?}",
            seed, violation
        )));
    }
    out.push_str(&format!(
        "PASS range simulator: {}/{} random filtered complexes clear (base seed {})\n",
        suite.clear, suite.runs, config.seed
    ));

    out.push_str("all checks passed\n");
    Ok(CommandOutput::text(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn resolved(args: &[(&str, &str)]) -> Result<RunConfig> {
        let mut partial = PartialConfig::default();
        for &(key, value) in args {
            match key {
                "command" => partial.command = Some(value.to_string()),
                "prime" => partial.prime = Some(value.parse().unwrap()),
                "level" => partial.level = Some(value.to_string()),
                "group" => partial.group = Some(value.to_string()),
                "inverted" => partial.inverted = Some(value == "true"),
                "s" => partial.s = Some(value.parse().unwrap()),
                "t" => partial.t = Some(value.parse().unwrap()),
                "format" => partial.format = Some(value.to_string()),
                "seed" => partial.seed = Some(value.parse().unwrap()),
                _ => panic!("unknown key {}", key),
            }
        }
        RunConfig::resolve(partial)
    }

    #[test]
    fn ring_basis_examples() {
        let config = resolved(&[
            ("command", "ring-basis"),
            ("prime", "5"),
            ("level", "n"),
            ("s", "9"),
            ("t", "8"),
        ])
        .unwrap();
        let out = execute(&config).unwrap().stdout;
        assert!(out.contains("dimension: 4"), "{}", out);

        let config = resolved(&[
            ("command", "ring-basis"),
            ("prime", "3"),
            ("level", "f"),
            ("s", "0"),
            ("t", "0"),
        ])
        .unwrap();
        let out = execute(&config).unwrap().stdout;
        assert!(out.contains("   1  1\n"), "{}", out);
        assert!(out.contains("dimension: 1"), "{}", out);
    }

    #[test]
    fn ss_run_collapse_statement() {
        let config = resolved(&[
            ("command", "ss-run"),
            ("prime", "3"),
            ("level", "f"),
            ("inverted", "true"),
        ])
        .unwrap();
        let out = execute(&config).unwrap().stdout;
        assert!(out.contains("page  10: interior identically zero"), "{}", out);
        assert!(out.contains("page   9: interior dimension"), "{}", out);
    }

    #[test]
    fn vanishing_line_statement() {
        let config = resolved(&[
            ("command", "vanishing-line"),
            ("prime", "3"),
            ("group", "g"),
        ])
        .unwrap();
        let out = execute(&config).unwrap().stdout;
        assert!(out.contains("page 10, s = 13"), "{}", out);
    }

    #[test]
    fn picard_bound_statements() {
        let config = resolved(&[
            ("command", "picard-bound"),
            ("prime", "5"),
            ("group", "n"),
        ])
        .unwrap();
        let out = execute(&config).unwrap().stdout;
        assert!(out.contains("degree   9: dimension 4"), "{}", out);

        let err = execute(
            &resolved(&[("command", "picard-bound"), ("prime", "3"), ("group", "n")]).unwrap(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Hypothesis(_)));
    }

    #[test]
    fn dims_table() {
        let config = resolved(&[("command", "dims")]).unwrap();
        let out = execute(&config).unwrap().stdout;
        assert!(out.contains("dimension   4"), "{}", out);
        assert!(out.contains("dimension   8"), "{}", out);
        assert!(out.contains("dimension  56"), "{}", out);
        assert!(!out.contains("DIFFER"), "{}", out);
    }

    #[test]
    fn flags_beat_file_values() {
        let file = PartialConfig {
            command: Some("dims".to_string()),
            prime: Some(7),
            inverted: Some(true),
            ..Default::default()
        };
        let flags = PartialConfig {
            prime: Some(5),
            ..Default::default()
        };
        let merged = PartialConfig::overlay(file, flags);
        assert_eq!(merged.prime, Some(5));
        assert_eq!(merged.command.as_deref(), Some("dims"));
        assert_eq!(merged.inverted, Some(true));
    }

    #[test]
    fn window_spec_parsing() {
        assert_eq!(
            parse_window_spec("0,24,-72,72").unwrap(),
            [0, 24, -72, 72]
        );
        assert!(parse_window_spec("0,24,-72").is_err());
        assert!(parse_window_spec("a,b,c,d").is_err());
    }

    #[test]
    fn window_override_must_contain_default_interior() {
        let config = RunConfig {
            window: Some([0, 10, -20, 20]),
            ..resolved(&[
                ("command", "ss-run"),
                ("prime", "3"),
                ("level", "f"),
                ("inverted", "true"),
            ])
            .unwrap()
        };
        assert!(matches!(execute(&config), Err(Error::Config(_))));

        let config = RunConfig {
            window: Some([-2, 26, -80, 80]),
            ..config
        };
        execute(&config).unwrap();
    }

    #[test]
    fn charts_only_for_ss_run() {
        let config = resolved(&[
            ("command", "dims"),
            ("format", "svg"),
        ])
        .unwrap();
        assert!(matches!(execute(&config), Err(Error::Config(_))));
    }

    #[test]
    fn resolve_catches_bad_input() {
        assert!(resolved(&[("command", "nope"), ("prime", "5")]).is_err());
        assert!(resolved(&[("command", "ss-run"), ("prime", "2")]).is_err());
        assert!(resolved(&[("command", "ss-run")]).is_err());
        // Missing level surfaces at execution time.
        let config = resolved(&[("command", "ss-run"), ("prime", "3")]).unwrap();
        assert!(matches!(execute(&config), Err(Error::Config(_))));
    }

    #[test]
    fn selftest_passes() {
        let config = resolved(&[("command", "selftest")]).unwrap();
        let out = execute(&config).unwrap().stdout;
        assert!(out.contains("all checks passed"), "{}", out);
        assert_eq!(out.matches("PASS").count(), 7, "{}", out);
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{
            "command": "ss-run",
            "prime": 3,
            "level": "f",
            "inverted": true,
            "format": "ascii-chart",
            "seed": 7
        }"#;
        let partial: PartialConfig = serde_json::from_str(text).unwrap();
        let config = RunConfig::resolve(partial).unwrap();
        assert_eq!(config.command, Command::SsRun);
        assert_eq!(config.level, Some(Level::F));
        assert!(config.inverted);
        assert_eq!(config.format, OutputFormat::AsciiChart);
        assert_eq!(config.seed, 7);

        let unknown: std::result::Result<PartialConfig, _> =
            serde_json::from_str(r#"{"primee": 5}"#);
        assert!(unknown.is_err());
    }
}

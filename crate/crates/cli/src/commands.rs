use std::io::Write;

use infocog_core::algorithmic::{complexity_estimate, index_symbols, lz78_parse};
use infocog_core::ca::{
    activity, classify_heuristic, elementary_rule, evolve, lambda_of, random_row,
    random_rule_with_lambda, single_seed_row, site_entropy, steepest_rise, summarize, sweep_sample,
    SweepConfig,
};
use infocog_core::cogaug::{evaluate_ledger, RateMetrics};
use infocog_core::emergence::{
    capacity_exponent, capacity_gain, capacity_peak, emergent_capacity, stonier_information,
    EmergenceInput, StonierParams,
};
use infocog_core::entropy::{
    boltzmann_entropy, conditional_entropy, empirical_distribution, gibbs_entropy,
    hartley_information, joint_entropy, max_entropy, message_information, mutual_information,
    negentropy, normalized_entropy, relative_entropy, renyi_entropy, shannon_entropy, EntropyUnits,
    JointDistribution, MessageSpec, MicrostateCount, ProbabilityDistribution,
};
use infocog_core::grit::{
    decode, psi, rank_elements, representational_information, structural_complexity,
    survey_subsets, BooleanCategory,
};
use infocog_core::physical::{mass_energy, max_bits, max_io_rate, max_ops_per_sec, PhysicalSystem};
use infocog_core::rng::{derive_seed, SplitMix64};
use rayon::prelude::*;

use crate::formats::{
    read_json, sweep_csv, sweep_summary_csv, CategoryFile, LedgerFile, SweepConfigFile,
};
use crate::output::{emit, Mode, Report, Val};
use crate::{
    AlgoArgs, CaCommand, CaRunArgs, CaSweepArgs, CliError, CogaugArgs, Command, EmergenceArgs,
    EntropyArgs, GritArgs, Init, LimitsArgs,
};

type CmdResult = Result<(), CliError>;

pub(crate) fn dispatch(cmd: Command, mode: Mode, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Entropy(a) => entropy(a, mode, out),
        Command::Algo(a) => algo(a, mode, out),
        Command::Limits(a) => limits(a, mode, out),
        Command::Emergence(a) => emergence(a, mode, out),
        Command::Ca(CaCommand::Run(a)) => ca_run(a, mode, out),
        Command::Ca(CaCommand::Sweep(a)) => ca_sweep(a, mode, out),
        Command::Grit(a) => grit(a, mode, out),
        Command::Cogaug(a) => cogaug(a, mode, out),
    }
}

fn finish(out: &mut dyn Write, report: &Report, mode: Mode) -> CmdResult {
    emit(out, report, mode)?;
    Ok(())
}

fn parse_list(flag: &str, text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|cell| {
            let cell = cell.trim();
            cell.parse::<f64>()
                .map_err(|_| CliError::Input(format!("{flag}: `{cell}` is not a number")))
        })
        .collect()
}

fn parse_matrix(flag: &str, text: &str) -> Result<Vec<Vec<f64>>, CliError> {
    text.split(';').map(|row| parse_list(flag, row)).collect()
}

fn unit_label(base: f64, scale: f64) -> &'static str {
    if scale != 1.0 {
        "units"
    } else if base == 2.0 {
        "bits"
    } else if base == std::f64::consts::E {
        "nats"
    } else if base == 10.0 {
        "dits"
    } else {
        "units"
    }
}

fn entropy(a: EntropyArgs, mode: Mode, out: &mut dyn Write) -> CmdResult {
    let u = EntropyUnits::new(a.base, a.scale)?;
    let label = unit_label(a.base, a.scale);
    let mut r = Report::new();

    let raw = if let Some(text) = &a.dist {
        Some(parse_list("--dist", text)?)
    } else if let Some(path) = &a.dist_file {
        Some(read_json::<Vec<f64>>(path)?)
    } else if let Some(message) = &a.message {
        let chars: Vec<char> = message.chars().collect();
        Some(empirical_distribution(&chars)?.into_vec())
    } else {
        None
    };

    if let Some(raw) = raw {
        let d = ProbabilityDistribution::new(raw)?;
        r.push(format!("shannon_{label}"), shannon_entropy(&d, u));
        r.push("gibbs", gibbs_entropy(&d, a.gibbs_k));
        r.push(format!("max_entropy_{label}"), max_entropy(d.len(), u));
        r.push(format!("negentropy_{label}"), negentropy(&d, u));
        if d.len() >= 2 {
            r.push("normalized_entropy", normalized_entropy(&d)?);
        }
        if let Some(alpha) = a.alpha {
            r.push(format!("renyi_{label}"), renyi_entropy(&d, alpha, u)?);
        }
        if let Some(m) = a.length {
            r.push(
                format!("message_information_{label}"),
                message_information(&d, m, u),
            );
        }
        if let Some(q) = &a.q {
            let q = ProbabilityDistribution::new(parse_list("--q", q)?)?;
            r.push(
                format!("relative_entropy_{label}"),
                relative_entropy(&d, &q, u)?,
            );
        }
    } else if a.q.is_some() || a.alpha.is_some() || a.length.is_some() {
        return Err(CliError::Usage(
            "--q, --alpha and --length need --dist, --dist-file or --message".into(),
        ));
    }

    let matrix = if let Some(text) = &a.joint {
        Some(parse_matrix("--joint", text)?)
    } else if let Some(path) = &a.joint_file {
        Some(read_json::<Vec<Vec<f64>>>(path)?)
    } else {
        None
    };
    if let Some(matrix) = matrix {
        let j = JointDistribution::new(&matrix)?;
        r.push(format!("joint_entropy_{label}"), joint_entropy(&j, u));
        r.push(format!("h_x_{label}"), shannon_entropy(&j.marginal_x(), u));
        r.push(format!("h_y_{label}"), shannon_entropy(&j.marginal_y(), u));
        r.push(
            format!("conditional_entropy_x_given_y_{label}"),
            conditional_entropy(&j, u),
        );
        r.push(
            format!("mutual_information_{label}"),
            mutual_information(&j, u),
        );
    }

    if let (Some(n), Some(s)) = (a.hartley_n, a.hartley_s) {
        let m = MessageSpec::new(s, n)?;
        r.push(format!("hartley_{label}"), hartley_information(m, u));
    }

    if let Some(w) = a.microstates {
        r.push(
            "boltzmann",
            boltzmann_entropy(MicrostateCount::new(w, a.boltzmann_k)?)?,
        );
    }

    if r.is_empty() {
        return Err(CliError::Usage(
            "nothing to compute: give --dist, --dist-file, --message, --joint, --joint-file, --hartley-n/--hartley-s or --microstates".into(),
        ));
    }
    finish(out, &r, mode)
}

fn algo(a: AlgoArgs, mode: Mode, out: &mut dyn Write) -> CmdResult {
    let (symbols, alphabet) = match (&a.text, &a.file) {
        (Some(text), _) if a.bytes => (text.bytes().map(u32::from).collect(), 256),
        (Some(text), _) => index_symbols(&text.chars().collect::<Vec<_>>()),
        (None, Some(path)) => {
            let bytes = std::fs::read(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            if a.bytes {
                (bytes.iter().map(|&b| u32::from(b)).collect(), 256)
            } else {
                index_symbols(&bytes)
            }
        }
        (None, None) => return Err(CliError::Usage("give --text or --file".into())),
    };
    let parse = lz78_parse(&symbols, alphabet)?;
    let est = complexity_estimate(&parse);
    let mut r = Report::new();
    r.push("source_length", parse.source_length)
        .push("alphabet_size", u64::from(alphabet))
        .push("phrase_count", est.phrase_count)
        .push("bit_estimate", est.bit_estimate);
    if parse.source_length > 0 {
        r.push(
            "bits_per_symbol",
            est.bit_estimate / parse.source_length as f64,
        );
    }
    finish(out, &r, mode)
}

fn limits(a: LimitsArgs, mode: Mode, out: &mut dyn Write) -> CmdResult {
    if a.energy_j.is_none() && a.mass_kg.is_none() && a.entropy_jk.is_none() {
        return Err(CliError::Usage(
            "give --energy-j, --mass-kg or --entropy-jk".into(),
        ));
    }
    let energy = match (a.energy_j, a.mass_kg) {
        (Some(e), _) => Some(e),
        (None, Some(m)) => Some(mass_energy(m)?),
        (None, None) => None,
    };
    let sys = PhysicalSystem {
        energy_j: energy.unwrap_or(0.0),
        entropy_jk: a.entropy_jk.unwrap_or(0.0),
        radius_m: a.radius_m.unwrap_or(0.0),
        mass_kg: a.mass_kg,
    };
    let mut r = Report::new();
    if let Some(e) = energy {
        r.push("energy_j", e);
        r.push("max_ops_per_sec", max_ops_per_sec(&sys)?);
    }
    if a.entropy_jk.is_some() {
        r.push("max_bits", max_bits(&sys)?);
    }
    if a.radius_m.is_some() {
        r.push("max_io_rate", max_io_rate(&sys)?);
    }
    finish(out, &r, mode)
}

fn emergence(a: EmergenceArgs, mode: Mode, out: &mut dyn Write) -> CmdResult {
    let mut r = Report::new();
    if a.peak {
        let p = capacity_peak();
        r.push("eta_star", p.eta_star).push("gain", p.gain_star);
        r.single_line = true;
        return finish(out, &r, mode);
    }
    if let Some(eta) = a.eta {
        r.push("eta", eta);
        r.push("exponent", capacity_exponent(eta));
        r.push("gain", capacity_gain(eta)?);
        if let Some(m) = a.m {
            r.push("capacity", emergent_capacity(EmergenceInput::new(m, eta)?)?);
        }
    }
    if let (Some(i0), Some(s)) = (a.stonier_i0, a.stonier_s) {
        r.push(
            "stonier_information",
            stonier_information(StonierParams::new(i0, a.stonier_k, s)?),
        );
    }
    if r.is_empty() {
        return Err(CliError::Usage(
            "give --eta, --stonier-i0/--stonier-s or --peak".into(),
        ));
    }
    finish(out, &r, mode)
}

fn digit_row(row: &[u8]) -> String {
    row.iter()
        .map(|&s| char::from_digit(u32::from(s), 36).unwrap_or('?'))
        .collect()
}

fn ca_run(a: CaRunArgs, mode: Mode, out: &mut dyn Write) -> CmdResult {
    let rule = match (a.rule, a.lambda) {
        (Some(code), _) => elementary_rule(code)?,
        (None, Some(lambda)) => {
            random_rule_with_lambda(a.states.unwrap_or(2), a.radius.unwrap_or(1), lambda, a.seed)?
        }
        (None, None) => return Err(CliError::Usage("give --rule or --lambda".into())),
    };
    let initial = match a.init {
        Init::Center => single_seed_row(a.width),
        Init::Random => random_row(
            rule.states(),
            a.width,
            &mut SplitMix64::new(derive_seed(a.seed, 1)),
        ),
    };
    let d = evolve(&rule, &initial, a.steps)?;

    if a.render && mode == Mode::Text {
        for row in d.rows() {
            writeln!(out, "{}", digit_row(row))?;
        }
        return Ok(());
    }

    let cutoff = a.cutoff.unwrap_or(a.steps / 2);
    let eta = site_entropy(&d, cutoff)?;
    let mut r = Report::new();
    if let Some(code) = a.rule {
        r.push("rule", u64::from(code));
    } else {
        r.push("seed", a.seed);
    }
    r.push("states", u64::from(rule.states()))
        .push("radius", rule.radius())
        .push("lambda", lambda_of(&rule))
        .push("width", d.width())
        .push("steps", d.steps())
        .push("cutoff", cutoff)
        .push("site_entropy_eta", eta)
        .push("activity", activity(&d, cutoff)?)
        .push(
            "capacity",
            infocog_core::emergence::emergent_capacity_or_limit(d.width() as f64, eta)?,
        );
    if d.steps() >= 2 {
        r.push("class_heuristic", classify_heuristic(&d)?.as_str());
    }
    if a.render {
        r.push(
            "rows",
            Val::List(
                d.rows()
                    .iter()
                    .map(|row| Val::Str(digit_row(row)))
                    .collect(),
            ),
        );
    }
    finish(out, &r, mode)
}

fn ca_sweep(a: CaSweepArgs, mode: Mode, out: &mut dyn Write) -> CmdResult {
    let mut file: SweepConfigFile = read_json(&a.config)?;
    if let Some(seed) = a.seed {
        file.seed = seed;
    }
    let cfg: SweepConfig = file.into();
    cfg.validate()?;
    let records = cfg
        .jobs()
        .par_iter()
        .map(|&(lambda, ordinal)| sweep_sample(&cfg, lambda, ordinal))
        .collect::<Result<Vec<_>, _>>()?;
    let summary = summarize(&records);

    if mode == Mode::Json {
        let mut r = Report::new();
        r.push("seed", cfg.seed);
        if let Some(l) = steepest_rise(&summary) {
            r.push("steepest_rise", l);
        }
        let rows = summary
            .iter()
            .map(|s| {
                let mut e = Report::new();
                e.push("lambda", s.lambda)
                    .push("samples", s.samples)
                    .push("mean_eta", s.mean_eta)
                    .push("mean_capacity", s.mean_capacity)
                    .push("mean_activity", s.mean_activity);
                Val::Nested(e)
            })
            .collect();
        r.push("summary", Val::List(rows));
        if !a.summary {
            let rows = records
                .iter()
                .map(|x| {
                    let mut e = Report::new();
                    e.push("lambda", x.lambda)
                        .push("seed", x.seed)
                        .push("eta", x.site_entropy_eta)
                        .push("capacity", x.capacity)
                        .push("activity", x.activity)
                        .push("class", x.class_heuristic.as_str());
                    Val::Nested(e)
                })
                .collect();
            r.push("records", Val::List(rows));
        }
        return finish(out, &r, mode);
    }

    let csv = if a.summary {
        sweep_summary_csv(&summary)
    } else {
        sweep_csv(&records)
    };
    out.write_all(csv.as_bytes())?;
    Ok(())
}

fn member_names(c: &BooleanCategory) -> Val {
    Val::List(
        c.members()
            .iter()
            .map(|&m| Val::Str(digit_row(&decode(m, c.dimensions()))))
            .collect(),
    )
}

fn grit(a: GritArgs, mode: Mode, out: &mut dyn Write) -> CmdResult {
    let mut r = Report::new();
    if let Some(d) = a.survey {
        let s = survey_subsets(d, a.k)?;
        r.push("dimensions", s.dimensions)
            .push("pairs", s.pairs)
            .push("max_h_s", s.max_h_s)
            .push("argmax_category", member_names(&s.argmax.0))
            .push("argmax_subset", member_names(&s.argmax.1))
            .push("min_h_s", s.min_h_s)
            .push("increasing_pairs", s.increasing_pairs);
        return finish(out, &r, mode);
    }

    let Some(path) = &a.category else {
        return Err(CliError::Usage("give --category or --survey".into()));
    };
    let f = read_json::<CategoryFile>(path)?.to_category()?;
    let sa = structural_complexity(&f, a.k)?;
    r.push("dimensions", f.dimensions())
        .push("members", f.len())
        .push(
            "partial_invariances",
            Val::List(
                sa.partial_invariances
                    .iter()
                    .map(|&x| Val::Num(x))
                    .collect(),
            ),
        )
        .push("phi", sa.phi)
        .push("k_scaling", sa.k_scaling)
        .push("psi", sa.psi);

    if let Some(sub) = &a.subset {
        let g = read_json::<CategoryFile>(sub)?.to_category()?;
        let h = representational_information(&f, &g, a.k)?;
        r.push("subset_members", g.len())
            .push("subset_psi", psi(&g, Some(sa.k_scaling))?)
            .push("h_s", h);
    }

    if a.rank {
        let mut ranked = Report::new();
        for (m, value) in rank_elements(&f, a.k)? {
            ranked.push(digit_row(&decode(m, f.dimensions())), value);
        }
        r.push("element_information", ranked);
    }
    finish(out, &r, mode)
}

fn push_rates(r: &mut Report, rates: &RateMetrics) {
    r.push_opt("efficiency", rates.efficiency)
        .push_opt("power_gain", rates.power_gain)
        .push_opt("power_work", rates.power_work)
        .push_opt("density_gain", rates.density_gain)
        .push_opt("density_work", rates.density_work);
}

fn cogaug(a: CogaugArgs, mode: Mode, out: &mut dyn Write) -> CmdResult {
    let file: LedgerFile = read_json(&a.ledger)?;
    let ledger = file.to_ledger()?;
    let rep = evaluate_ledger(&ledger)?;

    let mut steps = Report::new();
    for s in &rep.steps {
        let mut e = Report::new();
        e.push("agent", s.agent.as_str())
            .push("psi_in", s.psi_in)
            .push("psi_out", s.psi_out)
            .push("work", s.work)
            .push("gain", s.gain);
        push_rates(&mut e, &s.rates);
        steps.push(s.id.clone(), e);
    }

    let mut r = Report::new();
    r.push("steps", rep.steps.len())
        .push("step", steps)
        .push("w_human", rep.totals.work_human)
        .push("g_human", rep.totals.gain_human)
        .push("w_cog", rep.totals.work_cog)
        .push("g_cog", rep.totals.gain_cog)
        .push("w_total", rep.ensemble.work)
        .push("g_total", rep.ensemble.gain)
        .push("a_plus_w", rep.a_plus_work)
        .push("a_plus_g", rep.a_plus_gain)
        .push_opt("time_s", rep.total_time_s)
        .push_opt("energy_j", rep.total_energy_j);
    push_rates(&mut r, &rep.rates);
    finish(out, &r, mode)
}

//! Plain-text scenario configuration.
//!
//! The format is a list of `[section]` headers, each followed by `key = value`
//! lines. `#` starts a comment. Vectors are written `x, y, z` and complex values
//! `re, im`. Every section and key is optional; omitted values take the defaults
//! below. Unknown sections or keys are rejected.
//!
//! ```text
//! [carrier]
//! frequency_hz = 2450000000          # 2.45 GHz
//!
//! [link]
//! tx_anchor = 0, 0, 0                # antenna position at step 0, m
//! rx_position = 2, 0, 0              # stationary receiver, m
//!
//! [trajectory]
//! direction = 1, 0, 0                # platform heading (normalized)
//! step_lambda = 0.02                 # wavelengths per step
//! total_lambda = 6                   # wavelengths of travel
//! dwell_s = 0.2                      # settle time per sample
//! speed_m_per_s = 0.1                # speed between steps, for Doppler
//!
//! [rail]
//! usable_length_m = 1                # antenna travel available on the platform
//!
//! [mode]
//! kind = compensate                  # fixed | compensate | stationary
//!
//! [environment]
//! kind = anechoic                    # anechoic | office | explicit
//! seed = 0
//! residual_count = 4                 # anechoic only
//! residual_db = -30                  # anechoic only
//! # scatterer_count = 30             # office only
//! # room_extent_m = 6, 5, 3          # office only, box centred on the link
//! # scatterer = x, y, z, re, im      # explicit only, repeatable
//! los_enabled = true
//! reference_gain = 1
//!
//! [parasitic]                        # presence of the section enables it
//! offset = 0, 0, -0.15               # relative to the platform-borne anchor
//! reflectivity = 0.1, 0
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{wavelength, Carrier, ComplexGain, Vec3};
use crate::motion::{CompensationMode, Rail, SteppedTrajectory};
use crate::propagation::{Environment, Scatterer};
use crate::scenario::{
    make_anechoic, make_office, Parasitic, Scenario, DEFAULT_OFFICE_SCATTERERS, DEFAULT_RESIDUAL_COUNT,
    DEFAULT_RESIDUAL_DB, DEFAULT_ROOM_EXTENT_M, DEFAULT_RX_POSITION, DEFAULT_TX_ANCHOR,
};

/// How the environment is produced.
#[derive(Debug, Clone, PartialEq)]
pub enum EnvironmentSpec {
    Anechoic {
        seed: u64,
        residual_count: usize,
        residual_db: f64,
    },
    Office {
        seed: u64,
        scatterer_count: usize,
        room_extent_m: Vec3,
    },
    Explicit {
        scatterers: Vec<Scatterer>,
    },
}

impl Default for EnvironmentSpec {
    fn default() -> Self {
        EnvironmentSpec::Anechoic {
            seed: 0,
            residual_count: DEFAULT_RESIDUAL_COUNT,
            residual_db: DEFAULT_RESIDUAL_DB,
        }
    }
}

/// Parsed configuration, before the environment is generated.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub frequency_hz: f64,
    pub tx_anchor: Vec3,
    pub rx_position: Vec3,
    pub direction: Vec3,
    pub step_lambda: f64,
    pub total_lambda: f64,
    pub dwell_s: f64,
    pub speed_m_per_s: f64,
    pub usable_length_m: f64,
    pub mode: CompensationMode,
    pub environment: EnvironmentSpec,
    pub los_enabled: bool,
    pub reference_gain: f64,
    pub parasitic: Option<Parasitic>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        let traj = SteppedTrajectory::default();
        ScenarioConfig {
            frequency_hz: Carrier::default().frequency_hz(),
            tx_anchor: DEFAULT_TX_ANCHOR,
            rx_position: DEFAULT_RX_POSITION,
            direction: traj.direction(),
            step_lambda: traj.step_lambda(),
            total_lambda: traj.total_lambda(),
            dwell_s: traj.dwell_s(),
            speed_m_per_s: traj.speed_m_per_s(),
            usable_length_m: Rail::default().usable_length_m(),
            mode: CompensationMode::Compensate,
            environment: EnvironmentSpec::default(),
            los_enabled: true,
            reference_gain: 1.0,
            parasitic: None,
        }
    }
}

struct Entry<'a> {
    line: usize,
    key: &'a str,
    value: &'a str,
}

impl Entry<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::config(self.line, self.key, message)
    }

    fn f64(&self) -> Result<f64> {
        let v: f64 = self
            .value
            .parse()
            .map_err(|_| self.err(format!("`{}` is not a number", self.value)))?;
        if !v.is_finite() {
            return Err(self.err("value must be finite"));
        }
        Ok(v)
    }

    fn positive(&self) -> Result<f64> {
        let v = self.f64()?;
        if v <= 0.0 {
            return Err(self.err(format!("must be positive, got {v}")));
        }
        Ok(v)
    }

    fn non_negative(&self) -> Result<f64> {
        let v = self.f64()?;
        if v < 0.0 {
            return Err(self.err(format!("must be non-negative, got {v}")));
        }
        Ok(v)
    }

    fn integer<T: FromStr>(&self) -> Result<T> {
        self.value
            .parse()
            .map_err(|_| self.err(format!("`{}` is not a non-negative integer", self.value)))
    }

    fn list<const N: usize>(&self) -> Result<[f64; N]> {
        let parts: Vec<&str> = self.value.split(',').map(str::trim).collect();
        if parts.len() != N {
            return Err(self.err(format!("expected {N} comma-separated numbers")));
        }
        let mut out = [0.0; N];
        for (slot, part) in out.iter_mut().zip(parts) {
            *slot = part
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite())
                .ok_or_else(|| self.err(format!("`{part}` is not a finite number")))?;
        }
        Ok(out)
    }

    fn vec3(&self) -> Result<Vec3> {
        let [x, y, z] = self.list::<3>()?;
        Ok(Vec3::new(x, y, z))
    }

    fn reflectivity(&self) -> Result<ComplexGain> {
        let [re, im] = self.list::<2>()?;
        let g = ComplexGain::new(re, im);
        if g.norm() > 1.0 {
            return Err(self.err(format!("reflectivity magnitude {} exceeds 1", g.norm())));
        }
        Ok(g)
    }

    fn boolean(&self) -> Result<bool> {
        match self.value {
            "true" => Ok(true),
            "false" => Ok(false),
            v => Err(self.err(format!("`{v}` is not true or false"))),
        }
    }
}

const SECTIONS: [&str; 7] = [
    "carrier",
    "link",
    "trajectory",
    "rail",
    "mode",
    "environment",
    "parasitic",
];

impl ScenarioConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = ScenarioConfig::default();
        let mut section: Option<&str> = None;
        let mut seen_sections: Vec<&str> = Vec::new();
        let mut seen_keys: HashMap<(&str, &str), usize> = HashMap::new();
        let mut env_entries: Vec<Entry> = Vec::new();

        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(name) = content.strip_prefix('[') {
                let name = name
                    .strip_suffix(']')
                    .ok_or_else(|| Error::config(line, content, "unterminated section header"))?
                    .trim();
                let name = SECTIONS
                    .iter()
                    .copied()
                    .find(|s| *s == name)
                    .ok_or_else(|| Error::config(line, name, "unknown section"))?;
                if seen_sections.contains(&name) {
                    return Err(Error::config(line, name, "section appears twice"));
                }
                seen_sections.push(name);
                if name == "parasitic" {
                    cfg.parasitic = Some(Parasitic::default());
                }
                section = Some(name);
                continue;
            }

            let (key, value) = content
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::config(line, content, "expected `key = value`"))?;
            let section = section.ok_or_else(|| Error::config(line, key, "key outside of any section"))?;
            let entry = Entry { line, key, value };
            let repeatable = section == "environment" && key == "scatterer";
            if let Some(first) = seen_keys.insert((section, key), line) {
                if !repeatable {
                    return Err(entry.err(format!("duplicate key (first set on line {first})")));
                }
            }

            match (section, key) {
                ("carrier", "frequency_hz") => {
                    cfg.frequency_hz = entry.positive()?;
                    wavelength(cfg.frequency_hz).map_err(|e| entry.err(e.to_string()))?;
                }
                ("link", "tx_anchor") => cfg.tx_anchor = entry.vec3()?,
                ("link", "rx_position") => cfg.rx_position = entry.vec3()?,
                ("trajectory", "direction") => {
                    let d = entry.vec3()?;
                    cfg.direction = d.unit().ok_or_else(|| entry.err("direction must be non-zero"))?;
                }
                ("trajectory", "step_lambda") => cfg.step_lambda = entry.positive()?,
                ("trajectory", "total_lambda") => cfg.total_lambda = entry.non_negative()?,
                ("trajectory", "dwell_s") => cfg.dwell_s = entry.positive()?,
                ("trajectory", "speed_m_per_s") => cfg.speed_m_per_s = entry.non_negative()?,
                ("rail", "usable_length_m") => cfg.usable_length_m = entry.non_negative()?,
                ("mode", "kind") => cfg.mode = entry.value.parse().map_err(|m: String| entry.err(m))?,
                ("parasitic", "offset") => {
                    cfg.parasitic.get_or_insert_with(Parasitic::default).offset = entry.vec3()?
                }
                ("parasitic", "reflectivity") => {
                    cfg.parasitic.get_or_insert_with(Parasitic::default).reflectivity = entry.reflectivity()?
                }
                ("environment", "los_enabled") => cfg.los_enabled = entry.boolean()?,
                ("environment", "reference_gain") => cfg.reference_gain = entry.positive()?,
                ("environment", _) => env_entries.push(entry),
                _ => return Err(entry.err(format!("unknown key in [{section}]"))),
            }
        }

        cfg.environment = parse_environment(&env_entries)?;

        if cfg.tx_anchor == cfg.rx_position {
            let line = seen_keys
                .get(&("link", "rx_position"))
                .or_else(|| seen_keys.get(&("link", "tx_anchor")))
                .copied()
                .unwrap_or(0);
            return Err(Error::config(line, "rx_position", "rx position equals tx anchor"));
        }
        Ok(cfg)
    }

    /// Replaces the generator seed. Explicit environments have no seed.
    pub fn with_seed(mut self, new_seed: u64) -> Result<Self> {
        match &mut self.environment {
            EnvironmentSpec::Anechoic { seed, .. } | EnvironmentSpec::Office { seed, .. } => *seed = new_seed,
            EnvironmentSpec::Explicit { .. } => {
                return Err(Error::Usage(
                    "--seed-override needs a generated (anechoic or office) environment".into(),
                ))
            }
        }
        Ok(self)
    }

    pub fn link_center(&self) -> Vec3 {
        (self.tx_anchor + self.rx_position) * 0.5
    }

    /// Generates or copies the environment described by the configuration.
    pub fn build_environment(&self) -> Result<Environment> {
        let center = self.link_center();
        let mut env = match &self.environment {
            EnvironmentSpec::Anechoic {
                seed,
                residual_count,
                residual_db,
            } => make_anechoic(*seed, *residual_count, *residual_db, center)?,
            EnvironmentSpec::Office {
                seed,
                scatterer_count,
                room_extent_m,
            } => make_office(*seed, *scatterer_count, *room_extent_m, center)?,
            EnvironmentSpec::Explicit { scatterers } => Environment::with_scatterers(scatterers.clone()),
        };
        env.los_enabled = self.los_enabled;
        env.reference_gain = self.reference_gain;
        Ok(env)
    }

    pub fn to_scenario(&self) -> Result<Scenario> {
        let scenario = Scenario {
            environment: self.build_environment()?,
            carrier: Carrier::new(self.frequency_hz)?,
            trajectory: SteppedTrajectory::new(
                self.direction,
                self.step_lambda,
                self.dwell_s,
                self.total_lambda,
                self.speed_m_per_s,
            )?,
            rail: Rail::new(self.usable_length_m)?,
            mode: self.mode,
            tx_anchor: self.tx_anchor,
            rx_position: self.rx_position,
            parasitic: self.parasitic,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    /// Canonical text form; parsing it gives back an equal configuration.
    pub fn to_text(&self) -> String {
        let v = |p: Vec3| format!("{}, {}, {}", p.x, p.y, p.z);
        let mut out = String::new();
        let _ = writeln!(out, "[carrier]\nfrequency_hz = {}\n", self.frequency_hz);
        let _ = writeln!(
            out,
            "[link]\ntx_anchor = {}\nrx_position = {}\n",
            v(self.tx_anchor),
            v(self.rx_position)
        );
        let _ = writeln!(
            out,
            "[trajectory]\ndirection = {}\nstep_lambda = {}\ntotal_lambda = {}\ndwell_s = {}\nspeed_m_per_s = {}\n",
            v(self.direction),
            self.step_lambda,
            self.total_lambda,
            self.dwell_s,
            self.speed_m_per_s
        );
        let _ = writeln!(out, "[rail]\nusable_length_m = {}\n", self.usable_length_m);
        let _ = writeln!(out, "[mode]\nkind = {}\n", self.mode);
        out.push_str("[environment]\n");
        match &self.environment {
            EnvironmentSpec::Anechoic {
                seed,
                residual_count,
                residual_db,
            } => {
                let _ = writeln!(
                    out,
                    "kind = anechoic\nseed = {seed}\nresidual_count = {residual_count}\nresidual_db = {residual_db}"
                );
            }
            EnvironmentSpec::Office {
                seed,
                scatterer_count,
                room_extent_m,
            } => {
                let _ = writeln!(
                    out,
                    "kind = office\nseed = {seed}\nscatterer_count = {scatterer_count}\nroom_extent_m = {}",
                    v(*room_extent_m)
                );
            }
            EnvironmentSpec::Explicit { scatterers } => {
                out.push_str("kind = explicit\n");
                write_scatterers(&mut out, scatterers);
            }
        }
        let _ = writeln!(
            out,
            "los_enabled = {}\nreference_gain = {}",
            self.los_enabled, self.reference_gain
        );
        if let Some(p) = &self.parasitic {
            let _ = writeln!(
                out,
                "\n[parasitic]\noffset = {}\nreflectivity = {}, {}",
                v(p.offset),
                p.reflectivity.re,
                p.reflectivity.im
            );
        }
        out
    }
}

impl FromStr for ScenarioConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScenarioConfig::parse(s)
    }
}

fn write_scatterers(out: &mut String, scatterers: &[Scatterer]) {
    for s in scatterers {
        let p = s.position;
        let r = s.reflectivity;
        let _ = writeln!(out, "scatterer = {}, {}, {}, {}, {}", p.x, p.y, p.z, r.re, r.im);
    }
}

/// An `[environment]` section listing every scatterer of `env` explicitly.
pub fn environment_fragment(env: &Environment) -> String {
    let mut out = String::from("[environment]\nkind = explicit\n");
    write_scatterers(&mut out, &env.scatterers);
    let _ = writeln!(
        out,
        "los_enabled = {}\nreference_gain = {}",
        env.los_enabled, env.reference_gain
    );
    out
}

fn parse_environment(entries: &[Entry]) -> Result<EnvironmentSpec> {
    let kind = entries
        .iter()
        .find(|e| e.key == "kind")
        .map(|e| match e.value {
            "anechoic" | "office" | "explicit" => Ok(e.value),
            other => Err(e.err(format!(
                "unknown environment kind `{other}` (expected anechoic, office or explicit)"
            ))),
        })
        .transpose()?
        .unwrap_or("anechoic");

    let mut seed = 0u64;
    let mut residual_count = DEFAULT_RESIDUAL_COUNT;
    let mut residual_db = DEFAULT_RESIDUAL_DB;
    let mut scatterer_count = DEFAULT_OFFICE_SCATTERERS;
    let mut room_extent_m = DEFAULT_ROOM_EXTENT_M;
    let mut scatterers = Vec::new();

    for e in entries {
        let allowed = match e.key {
            "kind" => true,
            "seed" => kind != "explicit",
            "residual_count" | "residual_db" => kind == "anechoic",
            "scatterer_count" | "room_extent_m" => kind == "office",
            "scatterer" => kind == "explicit",
            _ => return Err(e.err("unknown key in [environment]")),
        };
        if !allowed {
            return Err(e.err(format!("not valid for environment kind `{kind}`")));
        }
        match e.key {
            "seed" => seed = e.integer()?,
            "residual_count" => residual_count = e.integer()?,
            "residual_db" => {
                residual_db = e.f64()?;
                if residual_db > 0.0 {
                    return Err(e.err("residual level must be at most 0 dB"));
                }
            }
            "scatterer_count" => {
                scatterer_count = e.integer()?;
                if scatterer_count == 0 {
                    return Err(e.err("an office needs at least one scatterer"));
                }
            }
            "room_extent_m" => {
                room_extent_m = e.vec3()?;
                if room_extent_m.x <= 0.0 || room_extent_m.y <= 0.0 || room_extent_m.z <= 0.0 {
                    return Err(e.err("room extent must be positive in every dimension"));
                }
            }
            "scatterer" => {
                let [x, y, z, re, im] = e.list::<5>()?;
                let s = Scatterer::new(Vec3::new(x, y, z), ComplexGain::new(re, im))
                    .map_err(|err| e.err(err.to_string()))?;
                scatterers.push(s);
            }
            _ => {}
        }
    }

    Ok(match kind {
        "anechoic" => EnvironmentSpec::Anechoic {
            seed,
            residual_count,
            residual_db,
        },
        "office" => EnvironmentSpec::Office {
            seed,
            scatterer_count,
            room_extent_m,
        },
        _ => EnvironmentSpec::Explicit { scatterers },
    })
}

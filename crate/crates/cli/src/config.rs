use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde::Deserialize;
use syntaxspace::eval::BaselineParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum TaggerKind {
    Builtin,
    Pretagged,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Baselines {
    pub bm25_k1: f64,
    pub bm25_b: f64,
    pub gst_min_tile: usize,
}

impl Default for Baselines {
    fn default() -> Self {
        let p = BaselineParams::default();
        Baselines { bm25_k1: p.bm25_k1, bm25_b: p.bm25_b, gst_min_tile: p.gst_min_tile }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub tagger: TaggerKind,
    pub synonym_path: Option<PathBuf>,
    pub top_k: usize,
    pub baselines: Baselines,
}

impl Default for Config {
    fn default() -> Self {
        Config { tagger: TaggerKind::Builtin, synonym_path: None, top_k: 5, baselines: Baselines::default() }
    }
}

impl Config {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        let c: Config = toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.top_k == 0 {
            bail!("top_k must be at least 1");
        }
        Ok(())
    }

    pub fn baseline_params(&self) -> BaselineParams {
        BaselineParams { bm25_k1: self.baselines.bm25_k1, bm25_b: self.baselines.bm25_b, gst_min_tile: self.baselines.gst_min_tile }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_partial_files() {
        let c: Config = toml::from_str("top_k = 3\n[baselines]\nbm25_b = 0.5\n").unwrap();
        assert_eq!(c.top_k, 3);
        assert_eq!(c.tagger, TaggerKind::Builtin);
        assert_eq!(c.baseline_params().bm25_b, 0.5);
        assert_eq!(c.baseline_params().bm25_k1, 1.2);
        let c: Config = toml::from_str("tagger = \"pretagged\"").unwrap();
        assert_eq!(c.tagger, TaggerKind::Pretagged);
    }

    #[test]
    fn rejects_bad_values() {
        assert!(toml::from_str::<Config>("colour = 1").is_err());
        assert!(toml::from_str::<Config>("top_k = 0").unwrap().validate().is_err());
    }
}

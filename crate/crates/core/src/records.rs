//! Report records emitted by the CLI: one line per record, either
//! tab-separated or JSON. Field order is fixed so output is byte-stable.

use serde::{Deserialize, Serialize};

use crate::cells;
use crate::error::Error;
use crate::pattern;
use crate::perm::AffinePermutation;
use crate::roots;
use crate::word;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Tsv,
    Jsonl,
}

/// Full evaluation of a single element: length, canonical word, all four
/// full-commutativity routes, the cell partition, and a 321 witness when
/// one exists.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EvalRecord {
    pub window: String,
    pub length: usize,
    pub word: String,
    pub fc_word: bool,
    pub fc_pair: bool,
    pub fc_321: bool,
    pub fc_root: bool,
    pub sigma: String,
    pub witness: Option<(i64, i64, i64)>,
}

pub fn eval_element(w: &AffinePermutation) -> Result<EvalRecord, Error> {
    let witness = pattern::find_321_instance(w);
    Ok(EvalRecord {
        window: w.to_string(),
        length: w.length(),
        word: w.canonical_reduced_word().to_string(),
        fc_word: word::is_fully_commutative(w)?,
        fc_pair: pattern::pair_criterion_holds(w),
        fc_321: witness.is_none(),
        fc_root: roots::root_criterion_holds(w),
        sigma: cells::shi_partition(w).compact(),
        witness,
    })
}

impl EvalRecord {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => {
                let witness = match self.witness {
                    Some((a, b, c)) => format!("{a},{b},{c}"),
                    None => "-".to_string(),
                };
                format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    self.window,
                    self.length,
                    self.word,
                    self.fc_word,
                    self.fc_pair,
                    self.fc_321,
                    self.fc_root,
                    self.sigma,
                    witness
                )
            }
            Format::Jsonl => serde_json::to_string(self).expect("record serializes"),
        }
    }
}

/// Enumeration stream record: window, length, one FC flag, partition.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EnumRecord {
    pub window: String,
    pub length: usize,
    pub fc: bool,
    pub sigma: String,
}

pub fn enum_record(w: &AffinePermutation) -> EnumRecord {
    EnumRecord {
        window: w.to_string(),
        length: w.length(),
        fc: pattern::is_321_avoiding(w),
        sigma: cells::shi_partition(w).compact(),
    }
}

impl EnumRecord {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => format!("{}\t{}\t{}\t{}", self.window, self.length, self.fc, self.sigma),
            Format::Jsonl => serde_json::to_string(self).expect("record serializes"),
        }
    }
}

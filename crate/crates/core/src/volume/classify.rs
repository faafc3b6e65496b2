use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::{catalan, total_volume_w, volume_poly};
use crate::combinatorics::{is_132_avoiding, psi_by_minima, Partition, Permutation, Permutations};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::DEFAULT_MAX_N;

#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    pub max_n: usize,
    /// Compute all `n!` volume polynomials and check equality inside each
    /// class and inequality across classes.
    pub paranoid: bool,
    /// Keep the member lists. Without them only class sizes are recorded.
    pub retain_members: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            max_n: DEFAULT_MAX_N,
            paranoid: false,
            retain_members: true,
        }
    }
}

/// One equal-volume class of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeClass {
    pub psi: Partition,
    pub size: u64,
    /// The unique 132-avoiding member.
    pub representative: Permutation,
    /// Members in lexicographic order, when retained.
    pub members: Option<Vec<Permutation>>,
    pub volume_a: Polynomial,
    pub volume_w: Polynomial,
}

/// `S_n` split into equal-volume classes, sorted by ψ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub n: usize,
    pub classes: Vec<VolumeClass>,
    pub total_volume_w: Polynomial,
}

impl Classification {
    pub fn catalan(&self) -> BigUint {
        catalan(self.n)
    }

    pub fn class_of(&self, psi: &Partition) -> Option<&VolumeClass> {
        self.classes
            .binary_search_by(|c| c.psi.cmp(psi))
            .ok()
            .map(|i| &self.classes[i])
    }

    /// JSON view; member lists are dropped for classes larger than
    /// `max_members` (all kept when `None`).
    pub fn to_json(&self, max_members: Option<u64>) -> ClassificationJson<'_> {
        ClassificationJson {
            n: self.n,
            catalan: self.catalan().to_string(),
            class_count: self.classes.len(),
            classes: self
                .classes
                .iter()
                .map(|c| ClassJson {
                    psi: &c.psi,
                    size: c.size,
                    representative: &c.representative,
                    volume_a_text: c.volume_a.to_string(),
                    volume_w_text: c.volume_w.to_string(),
                    volume_a: &c.volume_a,
                    volume_w: &c.volume_w,
                    members: c
                        .members
                        .as_deref()
                        .filter(|_| max_members.is_none_or(|m| c.size <= m)),
                })
                .collect(),
            total_volume_w: &self.total_volume_w,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassificationJson<'a> {
    pub n: usize,
    pub catalan: String,
    pub class_count: usize,
    pub classes: Vec<ClassJson<'a>>,
    pub total_volume_w: &'a Polynomial,
}

#[derive(Debug, Serialize)]
pub struct ClassJson<'a> {
    pub psi: &'a Partition,
    pub size: u64,
    pub representative: &'a Permutation,
    pub volume_a_text: String,
    pub volume_w_text: String,
    pub volume_a: &'a Polynomial,
    pub volume_w: &'a Polynomial,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<&'a [Permutation]>,
}

pub fn classify(n: usize) -> Result<Classification> {
    classify_with(n, &ClassifyOptions::default())
}

struct Bucket {
    size: u64,
    representative: Option<Permutation>,
    members: Vec<Permutation>,
}

pub fn classify_with(n: usize, opts: &ClassifyOptions) -> Result<Classification> {
    let mut buckets: BTreeMap<Partition, Bucket> = BTreeMap::new();
    for p in Permutations::with_max(n, opts.max_n)? {
        let bucket = buckets.entry(psi_by_minima(&p)).or_insert_with(|| Bucket {
            size: 0,
            representative: None,
            members: Vec::new(),
        });
        bucket.size += 1;
        if is_132_avoiding(&p) {
            if let Some(prev) = &bucket.representative {
                return Err(Error::ClassInvariant(format!(
                    "132-avoiding permutations {prev} and {p} share ψ = {}",
                    psi_by_minima(&p)
                )));
            }
            bucket.representative = Some(p.clone());
        }
        if opts.retain_members {
            bucket.members.push(p);
        }
    }

    let buckets: Vec<(Partition, Bucket)> = buckets.into_iter().collect();
    let classes = buckets
        .into_par_iter()
        .map(|(psi, bucket)| {
            let representative = bucket.representative.ok_or_else(|| {
                Error::ClassInvariant(format!("class ψ = {psi} has no 132-avoiding member"))
            })?;
            let volume_a = volume_poly(&representative);
            let volume_w = volume_a.substitute_a_to_w()?;
            Ok(VolumeClass {
                psi,
                size: bucket.size,
                representative,
                members: opts.retain_members.then_some(bucket.members),
                volume_a,
                volume_w,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let classification = Classification {
        n,
        classes,
        total_volume_w: total_volume_w(n),
    };
    if opts.paranoid {
        check_polynomials(&classification, opts.max_n)?;
    }
    Ok(classification)
}

/// Recomputes the volume of every permutation and checks it against its
/// class; also checks that distinct classes carry distinct volumes.
fn check_polynomials(c: &Classification, max_n: usize) -> Result<()> {
    let distinct: HashSet<&Polynomial> = c.classes.iter().map(|k| &k.volume_a).collect();
    if distinct.len() != c.classes.len() {
        return Err(Error::ClassInvariant(
            "two classes with different ψ have the same volume".into(),
        ));
    }
    let perms: Vec<Permutation> = Permutations::with_max(c.n, max_n)?.collect();
    perms.par_iter().try_for_each(|p| {
        let psi = psi_by_minima(p);
        let class = c
            .class_of(&psi)
            .ok_or_else(|| Error::ClassInvariant(format!("no class for ψ = {psi}")))?;
        if volume_poly(p) != class.volume_a {
            return Err(Error::ClassInvariant(format!(
                "volume of {p} differs from its class representative {}",
                class.representative
            )));
        }
        Ok(())
    })
}

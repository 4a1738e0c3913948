//! Serializable summaries for one surface and one target.

use serde::Serialize;

use crate::classify::{
    embedding_exists, immersion_exists, z_set, Existence, IndexDegreePair, ZSet,
};
use crate::surface::{IqDescriptor, Surface};
use crate::target::{DegreeSet, Target};

#[derive(Debug, Clone, Serialize)]
pub struct ZSetDescriptor {
    pub iq: IqDescriptor,
    pub degrees: DegreeSet,
    pub coupled: bool,
    /// Absent when infinite.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cardinality: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZSetReport {
    pub finite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<IndexDegreePair>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<ZSetDescriptor>,
}

impl From<&ZSet> for ZSetReport {
    fn from(z: &ZSet) -> Self {
        match z.pairs() {
            Some(p) => ZSetReport {
                finite: true,
                pairs: Some(p.to_vec()),
                descriptor: None,
            },
            None => ZSetReport {
                finite: z.is_finite(),
                pairs: None,
                descriptor: Some(ZSetDescriptor {
                    iq: z.iq.clone(),
                    degrees: z.degrees.clone(),
                    coupled: z.coupled,
                    cardinality: z.cardinality().map(|n| n.to_string()),
                }),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub surface: Surface,
    pub target: Target,
    pub immersion: Existence,
    pub embedding: Existence,
    pub z_set: ZSetReport,
}

impl ClassifyReport {
    pub fn new(surface: &Surface, target: &Target) -> Self {
        ClassifyReport {
            surface: *surface,
            target: *target,
            immersion: immersion_exists(surface, target),
            embedding: embedding_exists(surface, target),
            z_set: ZSetReport::from(&z_set(surface, target)),
        }
    }
}

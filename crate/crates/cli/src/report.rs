//! Serializable report payloads written to standard output. Field order is
//! the serialization order, which golden tests rely on.

use meanspin::measure::{EstimatedMeans, ExperimentReport, ShotRecord};
use meanspin::qcore::MeanSpinVector;
use meanspin::superpose::SuperpositionResult;
use serde::Serialize;

#[derive(Serialize)]
pub struct MeansOut {
    pub sx: f64,
    pub sy: f64,
    pub sz: f64,
}

impl From<&MeanSpinVector> for MeansOut {
    fn from(m: &MeanSpinVector) -> Self {
        Self {
            sx: m.sx,
            sy: m.sy,
            sz: m.sz,
        }
    }
}

#[derive(Serialize)]
pub struct AxisValues {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

#[derive(Serialize)]
pub struct SuperposeReport {
    pub means_out: MeansOut,
    pub t: f64,
    pub method: &'static str,
    /// Only present for `--method checked`: the larger of the means sup-norm
    /// deviation and the T deviation between the two routes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_deviation: Option<f64>,
}

impl SuperposeReport {
    pub fn from_result(result: &SuperpositionResult, method: &'static str) -> Self {
        Self {
            means_out: MeansOut::from(&result.means),
            t: result.normalization,
            method,
            cross_deviation: None,
        }
    }
}

#[derive(Serialize)]
pub struct ShotRecordOut {
    pub axis: &'static str,
    pub shots: u64,
    pub ups: u64,
}

impl From<&ShotRecord> for ShotRecordOut {
    fn from(record: &ShotRecord) -> Self {
        Self {
            axis: record.axis().as_str(),
            shots: record.shots(),
            ups: record.ups(),
        }
    }
}

#[derive(Serialize)]
pub struct EstimateOut {
    pub means: MeansOut,
    pub stderr: AxisValues,
}

impl From<&EstimatedMeans> for EstimateOut {
    fn from(estimate: &EstimatedMeans) -> Self {
        Self {
            means: MeansOut::from(&estimate.means),
            stderr: AxisValues {
                x: estimate.stderr[0],
                y: estimate.stderr[1],
                z: estimate.stderr[2],
            },
        }
    }
}

#[derive(Serialize)]
pub struct SimulateReport {
    pub shots_per_axis: u64,
    pub seed: u64,
    pub records: Vec<ShotRecordOut>,
    pub estimated_means: MeansOut,
    pub stderr: AxisValues,
}

impl SimulateReport {
    pub fn new(records: &[ShotRecord; 3], estimate: &EstimatedMeans, seed: u64) -> Self {
        Self {
            shots_per_axis: estimate.shots_per_axis,
            seed,
            records: records.iter().map(ShotRecordOut::from).collect(),
            estimated_means: MeansOut::from(&estimate.means),
            stderr: AxisValues {
                x: estimate.stderr[0],
                y: estimate.stderr[1],
                z: estimate.stderr[2],
            },
        }
    }
}

#[derive(Serialize)]
pub struct SuperposedOut {
    pub means_out: MeansOut,
    pub t: f64,
    pub method: &'static str,
}

impl From<&SuperpositionResult> for SuperposedOut {
    fn from(result: &SuperpositionResult) -> Self {
        Self {
            means_out: MeansOut::from(&result.means),
            t: result.normalization,
            method: result.method.as_str(),
        }
    }
}

#[derive(Serialize)]
pub struct ExperimentOut {
    pub shots_per_axis: u64,
    pub seed: u64,
    pub a_estimated: EstimateOut,
    pub b_estimated: EstimateOut,
    pub a_projected: MeansOut,
    pub b_projected: MeansOut,
    pub superposed: SuperposedOut,
    pub reference: SuperposedOut,
    pub deviation: f64,
}

impl ExperimentOut {
    pub fn new(report: &ExperimentReport, shots_per_axis: u64, seed: u64) -> Self {
        Self {
            shots_per_axis,
            seed,
            a_estimated: EstimateOut::from(&report.a_estimated),
            b_estimated: EstimateOut::from(&report.b_estimated),
            a_projected: MeansOut::from(&report.a_projected),
            b_projected: MeansOut::from(&report.b_projected),
            superposed: SuperposedOut::from(&report.superposed),
            reference: SuperposedOut::from(&report.reference),
            deviation: report.deviation,
        }
    }
}

#[derive(Serialize)]
pub struct ErrorReport {
    pub code: &'static str,
    pub message: String,
}

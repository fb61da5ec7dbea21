use std::fmt;

use serde::Serialize;

/// Branch of the case analysis that produced a result.
///
/// The serialized strings are stable and used verbatim in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseLabel {
    T1GprimeEmpty,
    T1V1Empty,
    T1V2Empty,
    T2Vp12Empty,
    T2OnlyVp12,
    T2C1IC,
    T2C1IiComplete,
    T2C1IiDomedge,
    T2C1IiV12Nonempty,
    T2C1IiV12EmptyComplete,
    T2C1IiV12EmptyDom,
    T2C2V2Side,
    T2C2U2Side,
    FallbackSearch,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 14] = [
        CaseLabel::T1GprimeEmpty,
        CaseLabel::T1V1Empty,
        CaseLabel::T1V2Empty,
        CaseLabel::T2Vp12Empty,
        CaseLabel::T2OnlyVp12,
        CaseLabel::T2C1IC,
        CaseLabel::T2C1IiComplete,
        CaseLabel::T2C1IiDomedge,
        CaseLabel::T2C1IiV12Nonempty,
        CaseLabel::T2C1IiV12EmptyComplete,
        CaseLabel::T2C1IiV12EmptyDom,
        CaseLabel::T2C2V2Side,
        CaseLabel::T2C2U2Side,
        CaseLabel::FallbackSearch,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::T1GprimeEmpty => "T1_GPRIME_EMPTY",
            CaseLabel::T1V1Empty => "T1_V1_EMPTY",
            CaseLabel::T1V2Empty => "T1_V2_EMPTY",
            CaseLabel::T2Vp12Empty => "T2_VP12_EMPTY",
            CaseLabel::T2OnlyVp12 => "T2_ONLY_VP12",
            CaseLabel::T2C1IC => "T2_C1_I_C",
            CaseLabel::T2C1IiComplete => "T2_C1_II_COMPLETE",
            CaseLabel::T2C1IiDomedge => "T2_C1_II_DOMEDGE",
            CaseLabel::T2C1IiV12Nonempty => "T2_C1_II_V12_NONEMPTY",
            CaseLabel::T2C1IiV12EmptyComplete => "T2_C1_II_V12_EMPTY_COMPLETE",
            CaseLabel::T2C1IiV12EmptyDom => "T2_C1_II_V12_EMPTY_DOM",
            CaseLabel::T2C2V2Side => "T2_C2_V2_SIDE",
            CaseLabel::T2C2U2Side => "T2_C2_U2_SIDE",
            CaseLabel::FallbackSearch => "FALLBACK_SEARCH",
        }
    }

    /// Number of case-specific witness vertices recorded with this label.
    ///
    /// - dominating-edge labels: the partner `u` of the edge `vu`;
    /// - `T2_ONLY_VP12`, `T2_C1_II_COMPLETE`: the connector `a` and `b`;
    /// - `T2_C1_I_C`: the five cycle vertices `u1..u5`, then the chosen vertex;
    /// - `T2_C1_II_DOMEDGE`: `a`, then the dominating edge `b c` of `G'`;
    /// - `T2_C1_II_V12_*COMPLETE`/`NONEMPTY`: the side vertex (`v1` or `v2`), `a`, `b`;
    /// - `T2_C1_II_V12_EMPTY_DOM`: the vertex dominating `V'12`;
    /// - Case 2 labels: the `U1` vertex, the `U2` vertex, the fourth vertex.
    pub fn witness_count(self) -> usize {
        match self {
            CaseLabel::T1GprimeEmpty | CaseLabel::T1V1Empty | CaseLabel::T1V2Empty => 1,
            CaseLabel::T2Vp12Empty | CaseLabel::FallbackSearch => 0,
            CaseLabel::T2OnlyVp12 | CaseLabel::T2C1IiComplete => 2,
            CaseLabel::T2C1IC => 6,
            CaseLabel::T2C1IiDomedge
            | CaseLabel::T2C1IiV12Nonempty
            | CaseLabel::T2C1IiV12EmptyComplete
            | CaseLabel::T2C2V2Side
            | CaseLabel::T2C2U2Side => 3,
            CaseLabel::T2C1IiV12EmptyDom => 1,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Label plus the vertices the branch bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseTrace {
    pub label: CaseLabel,
    pub v: usize,
    pub v1: usize,
    pub v2: usize,
    pub witnesses: Vec<usize>,
}

impl CaseTrace {
    pub fn new(label: CaseLabel, v: usize, v1: usize, v2: usize, witnesses: Vec<usize>) -> Self {
        let t = CaseTrace {
            label,
            v,
            v1,
            v2,
            witnesses,
        };
        debug_assert!(t.is_consistent(), "{t:?}");
        t
    }

    pub fn is_consistent(&self) -> bool {
        self.witnesses.len() == self.label.witness_count()
    }
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Leaves of the two residue decision trees (`a3` vanishing mod `t` or not).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLeaf {
    C1111,
    C1112,
    C112,
    C12111,
    C12112,
    C12113,
    C1212,
    C122,
    C211,
    C212,
    C2211,
    C22121,
    C22122,
    C22211,
    C22212,
    C222211,
    C222212,
    C22222,
}

impl CaseLeaf {
    pub const ALL: [CaseLeaf; 18] = [
        CaseLeaf::C1111,
        CaseLeaf::C1112,
        CaseLeaf::C112,
        CaseLeaf::C12111,
        CaseLeaf::C12112,
        CaseLeaf::C12113,
        CaseLeaf::C1212,
        CaseLeaf::C122,
        CaseLeaf::C211,
        CaseLeaf::C212,
        CaseLeaf::C2211,
        CaseLeaf::C22121,
        CaseLeaf::C22122,
        CaseLeaf::C22211,
        CaseLeaf::C22212,
        CaseLeaf::C222211,
        CaseLeaf::C222212,
        CaseLeaf::C22222,
    ];

    pub fn path(self) -> &'static str {
        match self {
            CaseLeaf::C1111 => "1-1-1-1",
            CaseLeaf::C1112 => "1-1-1-2",
            CaseLeaf::C112 => "1-1-2",
            CaseLeaf::C12111 => "1-2-1-1-1",
            CaseLeaf::C12112 => "1-2-1-1-2",
            CaseLeaf::C12113 => "1-2-1-1-3",
            CaseLeaf::C1212 => "1-2-1-2",
            CaseLeaf::C122 => "1-2-2",
            CaseLeaf::C211 => "2-1-1",
            CaseLeaf::C212 => "2-1-2",
            CaseLeaf::C2211 => "2-2-1-1",
            CaseLeaf::C22121 => "2-2-1-2-1",
            CaseLeaf::C22122 => "2-2-1-2-2",
            CaseLeaf::C22211 => "2-2-2-1-1",
            CaseLeaf::C22212 => "2-2-2-1-2",
            CaseLeaf::C222211 => "2-2-2-2-1-1",
            CaseLeaf::C222212 => "2-2-2-2-1-2",
            CaseLeaf::C22222 => "2-2-2-2-2",
        }
    }

    /// Leaves whose reduction (possibly after an affine change on the target)
    /// has full degree.
    pub fn has_good_reduction_type(self) -> bool {
        matches!(self, CaseLeaf::C1112 | CaseLeaf::C12113 | CaseLeaf::C212 | CaseLeaf::C22212 | CaseLeaf::C22222)
    }
}

impl fmt::Display for CaseLeaf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.path())
    }
}

impl FromStr for CaseLeaf {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        CaseLeaf::ALL.into_iter().find(|l| l.path() == s).ok_or_else(|| format!("unknown case {s:?}"))
    }
}

/// A taxonomy leaf, refined by a subcase `1..=6` on the deep leaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "LabelRepr", try_from = "LabelRepr")]
pub struct CaseLabel {
    pub leaf: CaseLeaf,
    pub deep_subcase: Option<u8>,
}

impl CaseLabel {
    pub fn leaf(leaf: CaseLeaf) -> Self {
        CaseLabel { leaf, deep_subcase: None }
    }

    pub fn deep(subcase: u8) -> Self {
        CaseLabel { leaf: CaseLeaf::C222211, deep_subcase: Some(subcase) }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.deep_subcase {
            Some(k) => write!(f, "{} (subcase {k})", self.leaf),
            None => write!(f, "{}", self.leaf),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct LabelRepr {
    case: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    deep_subcase: Option<u8>,
}

impl From<CaseLabel> for LabelRepr {
    fn from(l: CaseLabel) -> Self {
        LabelRepr { case: l.leaf.path().to_string(), deep_subcase: l.deep_subcase }
    }
}

impl TryFrom<LabelRepr> for CaseLabel {
    type Error = String;
    fn try_from(r: LabelRepr) -> Result<Self, String> {
        let leaf: CaseLeaf = r.case.parse()?;
        match (leaf, r.deep_subcase) {
            (CaseLeaf::C222211, Some(k @ 1..=6)) => Ok(CaseLabel::deep(k)),
            (CaseLeaf::C222211, _) => Err("deep leaf needs a subcase 1..=6".into()),
            (_, None) => Ok(CaseLabel::leaf(leaf)),
            (_, Some(_)) => Err(format!("case {leaf} has no subcases")),
        }
    }
}

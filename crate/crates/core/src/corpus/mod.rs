//! Speakers, utterances, frames, labels, and corpus construction.
//!
//! A corpus is immutable after construction and safe to share across threads.

mod io;
mod synth;

pub use io::{
    load_alignments, load_corpus, load_speakers, load_ult, save_alignments, save_ult,
    write_corpus, write_speakers,
};
pub use synth::{generate_synthetic_corpus, SyntheticConfig};

use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{path}: file size {size} is not a positive multiple of {frame_bytes} (frame bytes)")]
    SizeMismatch {
        path: String,
        size: u64,
        frame_bytes: usize,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },
    #[error("{path}: alignments overlap ({a} [{a_start},{a_end}] vs {b} [{b_start},{b_end}])")]
    Overlap {
        path: String,
        a: String,
        a_start: usize,
        a_end: usize,
        b: String,
        b_start: usize,
        b_end: usize,
    },
    #[error("invalid synthetic config: {0}")]
    Config(String),
    #[error("invalid frame data: {0}")]
    InvalidFrame(String),
    #[error("invalid utterance: {0}")]
    InvalidUtterance(String),
    #[error("invalid corpus: {0}")]
    InvalidCorpus(String),
}

/// One ultrasound frame: `height` scan lines of `width` echo returns each,
/// stored row-major (a row is one scan line). Raw files store unsigned bytes;
/// values are promoted to f64 on load and stay in [0, 255] until normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct UltrasoundFrame {
    height: usize,
    width: usize,
    data: Vec<f64>,
}

impl UltrasoundFrame {
    pub fn new(height: usize, width: usize, data: Vec<f64>) -> Result<Self, CorpusError> {
        if height == 0 || width == 0 {
            return Err(CorpusError::InvalidFrame("zero frame dimension".into()));
        }
        if data.len() != height * width {
            return Err(CorpusError::InvalidFrame(format!(
                "expected {}x{}={} samples, got {}",
                height,
                width,
                height * width,
                data.len()
            )));
        }
        Ok(Self { height, width, data })
    }

    pub fn zeros(height: usize, width: usize) -> Self {
        Self {
            height,
            width,
            data: vec![0.0; height * width],
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.width + col]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub(crate) fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// Encode as raw bytes. Requires every sample to be an integral value in
    /// [0, 255]; normalized frames are not byte-representable.
    pub fn to_bytes(&self) -> Result<Vec<u8>, CorpusError> {
        let mut out = Vec::with_capacity(self.data.len());
        for &v in &self.data {
            if !(0.0..=255.0).contains(&v) || v.fract() != 0.0 {
                return Err(CorpusError::InvalidFrame(format!(
                    "sample {v} is not an integral value in [0, 255]"
                )));
            }
            out.push(v as u8);
        }
        Ok(out)
    }
}

/// Articulation-place classes. Serialized as the integers 1-4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArticulationClass {
    /// Bilabial and labiodental phones (/p, b, m, f, v/).
    BilabialLabiodental,
    /// Dental, alveolar, and postalveolar phones (/t, d, s, z, sh, .../).
    DentalAlveolarPostalveolar,
    /// Velar phones (/k, g, ng/).
    Velar,
    /// The alveolar approximant /r/.
    AlveolarApproximant,
}

impl ArticulationClass {
    pub const ALL: [ArticulationClass; 4] = [
        ArticulationClass::BilabialLabiodental,
        ArticulationClass::DentalAlveolarPostalveolar,
        ArticulationClass::Velar,
        ArticulationClass::AlveolarApproximant,
    ];

    /// 1-based label used in files and reports.
    pub fn label(self) -> u8 {
        match self {
            ArticulationClass::BilabialLabiodental => 1,
            ArticulationClass::DentalAlveolarPostalveolar => 2,
            ArticulationClass::Velar => 3,
            ArticulationClass::AlveolarApproximant => 4,
        }
    }

    /// 0-based index into probability vectors.
    pub fn index(self) -> usize {
        self.label() as usize - 1
    }

    pub fn from_label(label: u8) -> Option<Self> {
        match label {
            1 => Some(ArticulationClass::BilabialLabiodental),
            2 => Some(ArticulationClass::DentalAlveolarPostalveolar),
            3 => Some(ArticulationClass::Velar),
            4 => Some(ArticulationClass::AlveolarApproximant),
            _ => None,
        }
    }

    pub fn from_index(index: usize) -> Option<Self> {
        u8::try_from(index + 1).ok().and_then(Self::from_label)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gender {
    Female,
    Male,
}

impl Gender {
    pub fn as_str(self) -> &'static str {
        match self {
            Gender::Female => "female",
            Gender::Male => "male",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "female" => Some(Gender::Female),
            "male" => Some(Gender::Male),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Speaker {
    pub id: String,
    pub age_years: u32,
    pub gender: Gender,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UtteranceType {
    A,
    B,
}

impl UtteranceType {
    pub fn as_str(self) -> &'static str {
        match self {
            UtteranceType::A => "A",
            UtteranceType::B => "B",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "A" => Some(UtteranceType::A),
            "B" => Some(UtteranceType::B),
            _ => None,
        }
    }
}

/// Phone-level alignment over an inclusive frame range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhoneAlignment {
    pub phone: String,
    pub start_frame: usize,
    pub end_frame: usize,
}

impl PhoneAlignment {
    pub fn new(phone: impl Into<String>, start_frame: usize, end_frame: usize) -> Option<Self> {
        if start_frame > end_frame {
            return None;
        }
        Some(Self {
            phone: phone.into(),
            start_frame,
            end_frame,
        })
    }

    /// Mid-phone frame index: floor of the range midpoint.
    pub fn mid_frame(&self) -> usize {
        (self.start_frame + self.end_frame) / 2
    }

    pub fn span_len(&self) -> usize {
        self.end_frame - self.start_frame + 1
    }
}

#[derive(Debug, Clone)]
pub struct Utterance {
    pub speaker_id: String,
    pub utterance_type: UtteranceType,
    pub frames: Vec<UltrasoundFrame>,
    pub fps: f64,
    pub alignments: Vec<PhoneAlignment>,
}

impl Utterance {
    /// Validates alignment invariants: every range inside the frame count,
    /// sorted by start, non-overlapping.
    pub fn new(
        speaker_id: impl Into<String>,
        utterance_type: UtteranceType,
        frames: Vec<UltrasoundFrame>,
        fps: f64,
        alignments: Vec<PhoneAlignment>,
    ) -> Result<Self, CorpusError> {
        if let Some(first) = frames.first() {
            let (h, w) = (first.height(), first.width());
            if frames.iter().any(|f| f.height() != h || f.width() != w) {
                return Err(CorpusError::InvalidUtterance(
                    "frames have mixed dimensions".into(),
                ));
            }
        }
        for a in &alignments {
            if a.end_frame >= frames.len() {
                return Err(CorpusError::InvalidUtterance(format!(
                    "alignment {} [{},{}] outside frame range 0..{}",
                    a.phone,
                    a.start_frame,
                    a.end_frame,
                    frames.len()
                )));
            }
        }
        for pair in alignments.windows(2) {
            if pair[1].start_frame < pair[0].start_frame {
                return Err(CorpusError::InvalidUtterance(
                    "alignments not sorted by start frame".into(),
                ));
            }
            if pair[1].start_frame <= pair[0].end_frame {
                return Err(CorpusError::InvalidUtterance(format!(
                    "alignments {} and {} overlap",
                    pair[0].phone, pair[1].phone
                )));
            }
        }
        Ok(Self {
            speaker_id: speaker_id.into(),
            utterance_type,
            frames,
            fps,
            alignments,
        })
    }
}

/// Phone-to-class lookup table. The default covers the four-class inventory;
/// phones absent from the table (vowels etc.) are excluded from the task.
#[derive(Debug, Clone)]
pub struct PhoneClassMap {
    map: BTreeMap<String, ArticulationClass>,
}

impl Default for PhoneClassMap {
    fn default() -> Self {
        use ArticulationClass::*;
        let mut map = BTreeMap::new();
        for p in ["p", "b", "m", "f", "v"] {
            map.insert(p.to_string(), BilabialLabiodental);
        }
        for p in ["th", "dh", "t", "d", "s", "z", "sh", "zh", "n", "l", "ch", "jh"] {
            map.insert(p.to_string(), DentalAlveolarPostalveolar);
        }
        for p in ["k", "g", "ng"] {
            map.insert(p.to_string(), Velar);
        }
        map.insert("r".to_string(), AlveolarApproximant);
        Self { map }
    }
}

impl PhoneClassMap {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (String, ArticulationClass)>) -> Self {
        Self {
            map: pairs.into_iter().collect(),
        }
    }

    /// `None` means the phone is excluded from the task (a valid outcome).
    pub fn class_of(&self, phone: &str) -> Option<ArticulationClass> {
        self.map.get(phone).copied()
    }

    pub fn phones_for(&self, class: ArticulationClass) -> Vec<&str> {
        self.map
            .iter()
            .filter(|(_, &c)| c == class)
            .map(|(p, _)| p.as_str())
            .collect()
    }
}

/// Look a phone up in a mapping table. Absence is a valid outcome, not an
/// error: unmapped phones are excluded from the task.
pub fn phone_to_class(phone: &str, mapping: &PhoneClassMap) -> Option<ArticulationClass> {
    mapping.class_of(phone)
}

#[derive(Debug, Clone)]
pub struct Corpus {
    pub speakers: Vec<Speaker>,
    pub utterances: Vec<Utterance>,
}

impl Corpus {
    pub fn new(speakers: Vec<Speaker>, utterances: Vec<Utterance>) -> Result<Self, CorpusError> {
        let mut seen = std::collections::BTreeSet::new();
        for s in &speakers {
            if s.age_years < 1 {
                return Err(CorpusError::InvalidCorpus(format!(
                    "speaker {} has age 0",
                    s.id
                )));
            }
            if !seen.insert(s.id.clone()) {
                return Err(CorpusError::InvalidCorpus(format!(
                    "duplicate speaker id {}",
                    s.id
                )));
            }
        }
        let mut dims: Option<(usize, usize)> = None;
        for u in &utterances {
            if !seen.contains(&u.speaker_id) {
                return Err(CorpusError::InvalidCorpus(format!(
                    "utterance references unknown speaker {}",
                    u.speaker_id
                )));
            }
            if let Some(f) = u.frames.first() {
                let d = (f.height(), f.width());
                match dims {
                    None => dims = Some(d),
                    Some(existing) if existing != d => {
                        return Err(CorpusError::InvalidCorpus(format!(
                            "mixed frame dimensions: {existing:?} vs {d:?}"
                        )));
                    }
                    _ => {}
                }
            }
        }
        Ok(Self { speakers, utterances })
    }

    /// Frame dimensions shared by every frame in the corpus.
    pub fn frame_dims(&self) -> Option<(usize, usize)> {
        self.utterances
            .iter()
            .flat_map(|u| u.frames.first())
            .map(|f| (f.height(), f.width()))
            .next()
    }

    pub fn speaker(&self, id: &str) -> Option<&Speaker> {
        self.speakers.iter().find(|s| s.id == id)
    }

    /// Speaker ids in sorted order (the canonical fold order).
    pub fn speaker_ids(&self) -> Vec<String> {
        let mut ids: Vec<String> = self.speakers.iter().map(|s| s.id.clone()).collect();
        ids.sort();
        ids
    }

    /// Utterance indices per speaker, in corpus order.
    pub fn utterances_by_speaker(&self) -> BTreeMap<String, Vec<usize>> {
        let mut map: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for s in &self.speakers {
            map.insert(s.id.clone(), Vec::new());
        }
        for (i, u) in self.utterances.iter().enumerate() {
            map.get_mut(&u.speaker_id).expect("validated speaker").push(i);
        }
        map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_phone_map_matches_task_inventory() {
        let map = PhoneClassMap::default();
        assert_eq!(
            phone_to_class("p", &map),
            Some(ArticulationClass::BilabialLabiodental)
        );
        assert_eq!(phone_to_class("k", &map), Some(ArticulationClass::Velar));
        assert_eq!(phone_to_class("a", &map), None);
        assert_eq!(
            phone_to_class("r", &map),
            Some(ArticulationClass::AlveolarApproximant)
        );
        assert_eq!(map.phones_for(ArticulationClass::DentalAlveolarPostalveolar).len(), 12);
    }

    #[test]
    fn class_labels_are_one_to_four() {
        for (i, c) in ArticulationClass::ALL.into_iter().enumerate() {
            assert_eq!(c.label() as usize, i + 1);
            assert_eq!(ArticulationClass::from_label(c.label()), Some(c));
        }
        assert_eq!(ArticulationClass::from_label(0), None);
        assert_eq!(ArticulationClass::from_label(5), None);
    }

    #[test]
    fn mid_frame_uses_floor() {
        let a = PhoneAlignment::new("r", 3, 8).unwrap();
        assert_eq!(a.mid_frame(), 5);
        let b = PhoneAlignment::new("p", 10, 20).unwrap();
        assert_eq!(b.mid_frame(), 15);
    }

    #[test]
    fn inverted_alignment_rejected() {
        assert!(PhoneAlignment::new("p", 20, 10).is_none());
    }

    #[test]
    fn utterance_rejects_overlap_and_out_of_range() {
        let frames = vec![UltrasoundFrame::zeros(2, 2); 10];
        let overlapping = vec![
            PhoneAlignment::new("p", 0, 5).unwrap(),
            PhoneAlignment::new("a", 3, 9).unwrap(),
        ];
        assert!(Utterance::new("s", UtteranceType::A, frames.clone(), 121.0, overlapping).is_err());
        let oob = vec![PhoneAlignment::new("p", 5, 10).unwrap()];
        assert!(Utterance::new("s", UtteranceType::A, frames, 121.0, oob).is_err());
    }
}

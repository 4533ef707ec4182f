//! Model/input variants shared across features, nn, and training.

use std::fmt;

/// Input format fed to the classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InputFormat {
    /// Mean-variance normalized raw frame.
    Raw,
    /// Eigentongue projection of the normalized frame.
    Pca,
    /// Flattened upper-left block of the 2D DCT of the normalized frame.
    Dct,
}

/// Network family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Dnn,
    Cnn,
}

/// The four model columns: DNN over Raw/PCA/DCT vectors and a CNN over the
/// raw frame. The CNN is defined on raw input only; other combinations are
/// rejected at parse time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelVariant {
    DnnRaw,
    DnnPca,
    DnnDct,
    CnnRaw,
}

impl ModelVariant {
    pub const ALL: [ModelVariant; 4] = [
        ModelVariant::DnnRaw,
        ModelVariant::DnnPca,
        ModelVariant::DnnDct,
        ModelVariant::CnnRaw,
    ];

    pub fn kind(self) -> ModelKind {
        match self {
            ModelVariant::CnnRaw => ModelKind::Cnn,
            _ => ModelKind::Dnn,
        }
    }

    pub fn input_format(self) -> InputFormat {
        match self {
            ModelVariant::DnnRaw | ModelVariant::CnnRaw => InputFormat::Raw,
            ModelVariant::DnnPca => InputFormat::Pca,
            ModelVariant::DnnDct => InputFormat::Dct,
        }
    }

    /// Combine a model kind and input format; `None` for combinations the
    /// experiment grid does not define (CNN with PCA or DCT input).
    pub fn from_parts(kind: ModelKind, format: InputFormat) -> Option<ModelVariant> {
        match (kind, format) {
            (ModelKind::Dnn, InputFormat::Raw) => Some(ModelVariant::DnnRaw),
            (ModelKind::Dnn, InputFormat::Pca) => Some(ModelVariant::DnnPca),
            (ModelKind::Dnn, InputFormat::Dct) => Some(ModelVariant::DnnDct),
            (ModelKind::Cnn, InputFormat::Raw) => Some(ModelVariant::CnnRaw),
            (ModelKind::Cnn, _) => None,
        }
    }

    /// Stable directory/label name, e.g. `cnn_raw`.
    pub fn slug(self) -> &'static str {
        match self {
            ModelVariant::DnnRaw => "dnn_raw",
            ModelVariant::DnnPca => "dnn_pca",
            ModelVariant::DnnDct => "dnn_dct",
            ModelVariant::CnnRaw => "cnn_raw",
        }
    }

    pub fn from_slug(s: &str) -> Option<ModelVariant> {
        match s {
            "dnn_raw" => Some(ModelVariant::DnnRaw),
            "dnn_pca" => Some(ModelVariant::DnnPca),
            "dnn_dct" => Some(ModelVariant::DnnDct),
            "cnn_raw" => Some(ModelVariant::CnnRaw),
            _ => None,
        }
    }

    /// Column header used in results tables.
    pub fn column_name(self) -> &'static str {
        match self {
            ModelVariant::DnnRaw => "DNN Raw",
            ModelVariant::DnnPca => "DNN PCA",
            ModelVariant::DnnDct => "DNN DCT",
            ModelVariant::CnnRaw => "CNN Raw",
        }
    }
}

impl fmt::Display for ModelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cnn_only_defined_on_raw() {
        assert_eq!(
            ModelVariant::from_parts(ModelKind::Cnn, InputFormat::Raw),
            Some(ModelVariant::CnnRaw)
        );
        assert_eq!(ModelVariant::from_parts(ModelKind::Cnn, InputFormat::Pca), None);
        assert_eq!(ModelVariant::from_parts(ModelKind::Cnn, InputFormat::Dct), None);
    }

    #[test]
    fn slug_round_trip() {
        for v in ModelVariant::ALL {
            assert_eq!(ModelVariant::from_slug(v.slug()), Some(v));
        }
    }
}

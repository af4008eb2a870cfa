//! JSON form: nested objects tagged by variety, e.g.
//! `{"tag":"star","inner":{"tag":"singleton","symbol":"a"}}`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Regexp;

#[derive(Serialize)]
#[serde(tag = "tag", rename_all = "lowercase")]
enum ReprRef<'a> {
    Null,
    Empty,
    Singleton { symbol: char },
    Union { left: &'a Regexp, right: &'a Regexp },
    Concat { left: &'a Regexp, right: &'a Regexp },
    Star { inner: &'a Regexp },
}

#[derive(Deserialize)]
#[serde(tag = "tag", rename_all = "lowercase", deny_unknown_fields)]
enum Repr {
    Null,
    Empty,
    Singleton {
        symbol: char,
    },
    Union {
        left: Box<Regexp>,
        right: Box<Regexp>,
    },
    Concat {
        left: Box<Regexp>,
        right: Box<Regexp>,
    },
    Star {
        inner: Box<Regexp>,
    },
}

impl Serialize for Regexp {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            Regexp::Null => ReprRef::Null,
            Regexp::Empty => ReprRef::Empty,
            Regexp::Singleton(c) => ReprRef::Singleton { symbol: *c },
            Regexp::Union(l, r) => ReprRef::Union { left: l, right: r },
            Regexp::Concat(l, r) => ReprRef::Concat { left: l, right: r },
            Regexp::Star(inner) => ReprRef::Star { inner },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Regexp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(match Repr::deserialize(deserializer)? {
            Repr::Null => Regexp::Null,
            Repr::Empty => Regexp::Empty,
            Repr::Singleton { symbol } => Regexp::Singleton(symbol),
            Repr::Union { left, right } => Regexp::Union(left, right),
            Repr::Concat { left, right } => Regexp::Concat(left, right),
            Repr::Star { inner } => Regexp::Star(inner),
        })
    }
}

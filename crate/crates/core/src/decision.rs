use core::fmt;

/// Answer of a test that is not decidable in every ring of the tower.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
    Undecided,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Decision::Yes
    }

    pub fn is_no(self) -> bool {
        self == Decision::No
    }

    /// Three-valued conjunction: any `No` wins, then any `Undecided`.
    pub fn and(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::No, _) | (_, Decision::No) => Decision::No,
            (Decision::Yes, Decision::Yes) => Decision::Yes,
            _ => Decision::Undecided,
        }
    }

    pub fn or(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::Yes, _) | (_, Decision::Yes) => Decision::Yes,
            (Decision::No, Decision::No) => Decision::No,
            _ => Decision::Undecided,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Undecided => "undecided",
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

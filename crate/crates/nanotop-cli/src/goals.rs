//! The mining goal vocabulary.
//!
//! Three fixed shapes, no general expression language:
//!
//! * `A&!B` with class tokens `NO NaO NsO NpO NSaO` (open side) or
//!   `NC NaC NsC NpC NSaC` (closed side): a set in class A outside B.
//! * `meet-escape:<open token>`: two class members whose intersection
//!   leaves the class.
//! * `strict:T4.5iv | strict:T4.5v | strict:T4.7iv | strict:T4.7v`:
//!   a pair where the named additivity inclusion is strict.

use nanotop::{ClassKind, ClassSpec, MineGoal, Side, StrictLaw};

use crate::CliError;

pub fn parse_goal(text: &str) -> Result<MineGoal, CliError> {
    if let Some(token) = text.strip_prefix("meet-escape:") {
        let spec = parse_class_token(token)?;
        if spec.side != Side::Open {
            return Err(CliError::UnknownGoal(text.to_owned()));
        }
        return Ok(MineGoal::MeetEscape { kind: spec.kind });
    }
    if let Some(law) = text.strip_prefix("strict:") {
        let law = match law {
            "T4.5iv" => StrictLaw::InteriorOfMeet,
            "T4.5v" => StrictLaw::InteriorOfJoin,
            "T4.7iv" => StrictLaw::ClosureOfMeet,
            "T4.7v" => StrictLaw::ClosureOfJoin,
            _ => return Err(CliError::UnknownGoal(text.to_owned())),
        };
        return Ok(MineGoal::EqualityFailure { law });
    }
    if let Some((have, lack)) = text.split_once("&!") {
        return Ok(MineGoal::ClassDifference {
            have: parse_class_token(have).map_err(|_| CliError::UnknownGoal(text.to_owned()))?,
            lack: parse_class_token(lack).map_err(|_| CliError::UnknownGoal(text.to_owned()))?,
        });
    }
    Err(CliError::UnknownGoal(text.to_owned()))
}

fn parse_class_token(token: &str) -> Result<ClassSpec, CliError> {
    let (kind, side) = match token {
        "NO" => (ClassKind::NOpen, Side::Open),
        "NC" => (ClassKind::NOpen, Side::Closed),
        "NpO" => (ClassKind::NPre, Side::Open),
        "NpC" => (ClassKind::NPre, Side::Closed),
        "NsO" => (ClassKind::NSemi, Side::Open),
        "NsC" => (ClassKind::NSemi, Side::Closed),
        "NaO" => (ClassKind::NAlpha, Side::Open),
        "NaC" => (ClassKind::NAlpha, Side::Closed),
        "NSaO" => (ClassKind::NSemiAlpha, Side::Open),
        "NSaC" => (ClassKind::NSemiAlpha, Side::Closed),
        _ => return Err(CliError::UnknownGoal(token.to_owned())),
    };
    Ok(ClassSpec { kind, side })
}

//! Virtual time. The simulation clock counts microseconds from scenario
//! start; nothing in the engine ever consults the wall clock.

use std::fmt;
use std::ops::{Add, AddAssign, Sub};

use serde::{Deserialize, Serialize};

/// Virtual microseconds since scenario start. Also used for deltas.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct SimTime(pub u64);

impl SimTime {
    pub const ZERO: SimTime = SimTime(0);

    pub const fn from_micros(us: u64) -> Self {
        SimTime(us)
    }

    pub const fn from_millis(ms: u64) -> Self {
        SimTime(ms * 1_000)
    }

    pub const fn from_secs(s: u64) -> Self {
        SimTime(s * 1_000_000)
    }

    pub const fn as_micros(self) -> u64 {
        self.0
    }

    /// Seconds as a float, for reporting only.
    pub fn as_secs_f64(self) -> f64 {
        self.0 as f64 / 1e6
    }

    /// Split into whole seconds and leftover microseconds (pcap timestamps).
    pub const fn split_secs_micros(self) -> (u64, u32) {
        (self.0 / 1_000_000, (self.0 % 1_000_000) as u32)
    }

    pub const fn saturating_sub(self, rhs: SimTime) -> SimTime {
        SimTime(self.0.saturating_sub(rhs.0))
    }
}

impl Add for SimTime {
    type Output = SimTime;
    fn add(self, rhs: SimTime) -> SimTime {
        SimTime(self.0 + rhs.0)
    }
}

impl AddAssign for SimTime {
    fn add_assign(&mut self, rhs: SimTime) {
        self.0 += rhs.0;
    }
}

impl Sub for SimTime {
    type Output = SimTime;
    fn sub(self, rhs: SimTime) -> SimTime {
        SimTime(self.0 - rhs.0)
    }
}

impl fmt::Display for SimTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, us) = self.split_secs_micros();
        write!(f, "{s}.{us:06}s")
    }
}

/// Parses a human duration like `60s`, `250ms`, `100us` or `1.5s`.
pub fn parse_duration(text: &str) -> Result<SimTime, String> {
    let text = text.trim();
    let (num, scale) = if let Some(n) = text.strip_suffix("us") {
        (n, 1u64)
    } else if let Some(n) = text.strip_suffix("ms") {
        (n, 1_000)
    } else if let Some(n) = text.strip_suffix('s') {
        (n, 1_000_000)
    } else {
        return Err(format!("duration `{text}` needs a unit (us, ms or s)"));
    };
    let num = num.trim();
    if let Ok(v) = num.parse::<u64>() {
        return Ok(SimTime(v * scale));
    }
    match num.parse::<f64>() {
        Ok(v) if v >= 0.0 && v.is_finite() => Ok(SimTime((v * scale as f64).round() as u64)),
        _ => Err(format!("bad duration value `{text}`")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_units() {
        assert_eq!(parse_duration("60s").unwrap(), SimTime::from_secs(60));
        assert_eq!(parse_duration("250ms").unwrap(), SimTime::from_millis(250));
        assert_eq!(parse_duration("100us").unwrap(), SimTime::from_micros(100));
        assert_eq!(parse_duration("1.5s").unwrap(), SimTime::from_micros(1_500_000));
        assert!(parse_duration("12").is_err());
        assert!(parse_duration("-3s").is_err());
    }

    #[test]
    fn displays_fixed_width_micros() {
        assert_eq!(SimTime::from_micros(1_000_001).to_string(), "1.000001s");
        assert_eq!(SimTime::ZERO.to_string(), "0.000000s");
    }
}

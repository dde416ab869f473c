//! Multivariate signals: `p` channels of `n` real samples.

use crate::error::{Error, Result};

/// A `p x n` block of real samples, stored channel-major, with optional
/// channel names.
#[derive(Debug, Clone, PartialEq)]
pub struct MultivariateSignal {
    channels: Vec<Vec<f64>>,
    names: Option<Vec<String>>,
}

impl MultivariateSignal {
    /// Build from channel rows. All channels must be nonempty, equally
    /// long, and finite.
    pub fn from_channels(channels: Vec<Vec<f64>>) -> Result<Self> {
        if channels.is_empty() {
            return Err(Error::invalid("signal must have at least one channel"));
        }
        let n = channels[0].len();
        if n == 0 {
            return Err(Error::invalid("signal must have at least one sample"));
        }
        for (s, ch) in channels.iter().enumerate() {
            if ch.len() != n {
                return Err(Error::invalid(format!(
                    "channel {} has {} samples, expected {}",
                    s + 1,
                    ch.len(),
                    n
                )));
            }
            if let Some(t) = ch.iter().position(|v| !v.is_finite()) {
                return Err(Error::invalid(format!(
                    "channel {} has a non-finite value at sample {}",
                    s + 1,
                    t + 1
                )));
            }
        }
        Ok(MultivariateSignal {
            channels,
            names: None,
        })
    }

    /// Single-channel convenience constructor.
    pub fn univariate(samples: Vec<f64>) -> Result<Self> {
        Self::from_channels(vec![samples])
    }

    /// Attach channel names; the count must match the channel count.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.channels.len() {
            return Err(Error::invalid(format!(
                "{} names for {} channels",
                names.len(),
                self.channels.len()
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    /// Number of channels `p`.
    pub fn num_channels(&self) -> usize {
        self.channels.len()
    }

    /// Number of samples per channel `n`.
    pub fn num_samples(&self) -> usize {
        self.channels[0].len()
    }

    /// Samples of channel `s` (0-based).
    pub fn channel(&self, s: usize) -> &[f64] {
        &self.channels[s]
    }

    pub fn channel_names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Sample at time `t` of channel `s`, both 0-based.
    pub fn sample(&self, t: usize, s: usize) -> f64 {
        self.channels[s][t]
    }

    /// Flatten time-major: index `t * p + s` holds the sample of channel
    /// `s` at time `t`. This matches the vertex ordering of the Cartesian
    /// product of a time path with a channel interaction graph.
    pub fn flatten_time_major(&self) -> Vec<f64> {
        let p = self.num_channels();
        let n = self.num_samples();
        let mut flat = Vec::with_capacity(n * p);
        for t in 0..n {
            for s in 0..p {
                flat.push(self.channels[s][t]);
            }
        }
        flat
    }
}

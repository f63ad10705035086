//! Waveform-level library and discrete-event simulator for a bucket-brigade
//! power-line sensor network.
//!
//! Sensor nodes are deployed as a queue along a shared power/communications
//! cable. Fixed-size frames ("buckets") are exchanged as QAM/OFDM bursts and
//! relayed node by node toward a single coordinator. The crate is organized
//! in layers:
//!
//! * [`framecodec`] — bit-exact bucket construction and parsing: field
//!   packing, CRC integrity, scrambling, forward error correction,
//!   replica majority vote.
//! * [`modem`] — complex-baseband OFDM burst synthesis and recovery:
//!   QAM mapping, IFFT/cyclic prefix, preamble/SFD, self-correlation burst
//!   detection, pilot-based equalization.
//! * [`channel`] — the shared cable: attenuation, propagation delay, FIR
//!   multipath, generalized-Gaussian noise, superposition, link budgets.
//! * [`protocol`] — coordinator and sensor-node state machines: power-ramped
//!   association, measurement cycles, priority/CSMA arbitration, failure
//!   recovery.
//! * [`simkernel`] — deterministic discrete-event scheduler binding the
//!   protocol machines to the channel, with fault injection, structured
//!   event logs and metrics.
//! * [`analytics`] — closed-form calculators (PHY rate, bucket rate, cycle
//!   latency, link range, Q-functions, M-QAM symbol error rate) used to
//!   cross-validate the simulator.

pub mod analytics;
pub mod bits;
pub mod channel;
pub mod framecodec;
pub mod modem;
pub mod protocol;
pub mod simkernel;

//! Newform records, Sturm bounds, and congruence-prime detection.

//! The condition battery, level enumeration, and obstruction witnesses.

pub mod blocks;
pub mod harvest;
pub mod tree;
pub mod triconnected;

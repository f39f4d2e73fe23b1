pub mod certificate;
pub mod flow;
pub mod kconn;
pub mod planarity;

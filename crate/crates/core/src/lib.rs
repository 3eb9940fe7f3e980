pub mod cli;
pub mod identities;
pub mod quad;
pub mod specfun;
pub mod verify;

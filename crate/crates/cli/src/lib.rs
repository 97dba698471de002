pub mod bench;
pub mod commands;
pub mod format;
pub mod verify;

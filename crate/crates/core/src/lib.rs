pub mod schlafli;
pub mod skeletons;
pub mod metrics;
pub mod hypermetrics;
pub mod embeddings;
pub mod riemann;
pub mod atlas;
pub mod cli;

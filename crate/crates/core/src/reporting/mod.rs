//! Admissible sets, sporadic-integer reports, presence files and SVG drawings.

mod catalog;
mod presence_io;
mod render;
mod report;

pub use catalog::{table_seeds, TableSeed};
pub use presence_io::{presence_from_bytes, presence_to_bytes, read_presence, write_presence, PRESENCE_MAGIC};
pub use render::{render_circles, render_svg, RenderLimits, RenderedCircle};
pub use report::{
    admissible_count, admissible_residues, is_admissible, obstructed_values, report_from_presence, sporadic_report,
    ReportOptions, SporadicReport, JSON_LIST_LIMIT,
};

//! Print the table of corrected closed forms as Markdown.

fn main() {
    print!("{}", chebder::errata::to_markdown());
}

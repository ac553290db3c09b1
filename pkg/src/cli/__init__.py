from .commands import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, build_parser, run
from .render import render, render_structured, render_text

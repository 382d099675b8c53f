import os
import sys
import logging

logger = logging.getLogger("terminal_ui")


class Colors:
    """ANSI color codes for terminal output"""
    RESET = "\033[0m"
    RED = "\033[91m"
    GREEN = "\033[92m"
    YELLOW = "\033[93m"
    BLUE = "\033[94m"
    CYAN = "\033[96m"
    GRAY = "\033[90m"
    BOLD = "\033[1m"


class TerminalUI:
    def __init__(self, stream=None, err_stream=None):
        self.stream = stream or sys.stdout
        self.err_stream = err_stream or sys.stderr
        self.supports_ansi = self._check_ansi_support()

    def _check_ansi_support(self):
        """Colors only on an interactive terminal that does not opt out via NO_COLOR"""
        if os.getenv("NO_COLOR"):
            return False
        isatty = getattr(self.stream, "isatty", None)
        return bool(isatty and isatty())

    def _paint(self, text, color):
        if self.supports_ansi and color:
            return f"{color}{text}{Colors.RESET}"
        return text

    def print_colored(self, text, color=Colors.RESET, end="\n"):
        """Print text with color if supported"""
        print(self._paint(text, color), end=end, file=self.stream)
        self.stream.flush()

    def print_plain(self, text):
        """Machine-readable output, never colored"""
        self.stream.write(text)
        self.stream.flush()

    def print_error(self, text):
        print(f"error: {text}", file=self.err_stream)
        self.err_stream.flush()

    def print_table(self, headers, rows, colors=None):
        """
        Print rows as an aligned table. colors maps a column name to a function
        cell value -> color code.
        """
        colors = colors or {}
        cells = [[str(h) for h in headers]] + [["-" if c is None else str(c) for c in row] for row in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]

        self.print_colored("  ".join(h.ljust(w) for h, w in zip(cells[0], widths)), Colors.BOLD)
        for raw, row in zip(rows, cells[1:]):
            parts = []
            for name, value, text, width in zip(headers, raw, row, widths):
                color = colors[name](value) if name in colors else None
                parts.append(self._paint(text.ljust(width), color))
            print("  ".join(parts).rstrip(), file=self.stream)
        self.stream.flush()


def kind_color(kind):
    if kind == "within_bound":
        return Colors.GREEN
    if kind == "biclique":
        return Colors.YELLOW
    if kind == "error":
        return Colors.RED
    return None

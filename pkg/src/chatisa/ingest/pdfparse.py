"""Minimal PDF text extractor.

Parses the subset of PDF needed to pull positioned text runs with their
font sizes out of digitally-produced documents: object scan, FlateDecode /
ASCII85 / ASCIIHex filters, page-tree walk, and an interpreter for the text
operators of content streams (BT/ET, Tf, Tm, Td/TD/T*/TL, Tj, TJ, ', ").

Deliberately defensive rather than complete: any structural surprise raises
PdfParseError, every loop is bounded, and unsupported filters simply
contribute no text. Font encodings are not mapped; string bytes are read as
Latin-1, which is faithful for the WinAnsi-encoded standard fonts this
service produces and ingests.
"""

from __future__ import annotations

import base64
import re
import zlib
from dataclasses import dataclass

from ..errors import PdfParseError

_MAX_OBJECTS = 200_000
_MAX_DECOMPRESSED = 128 * 1024 * 1024  # per document, all streams together
_WHITESPACE = b"\x00\t\n\x0c\r "
_DELIMITERS = b"()<>[]{}/%"

_OBJ_HEAD = re.compile(rb"(\d{1,9})\s+(\d{1,5})\s+obj\b")


@dataclass(frozen=True)
class Ref:
    num: int


@dataclass
class TextRun:
    page: int
    x: float
    y: float
    size: float
    text: str
    font: str = ""


class _Lexer:
    """Tokenizer shared by the object parser and the content interpreter."""

    def __init__(self, data: bytes, pos: int = 0):
        self.data = data
        self.pos = pos
        self.end = len(data)

    def _skip_ws(self) -> None:
        data, end = self.data, self.end
        while self.pos < end:
            ch = data[self.pos]
            if ch in _WHITESPACE:
                self.pos += 1
            elif ch == 0x25:  # '%' comment to end of line
                eol = data.find(b"\n", self.pos)
                self.pos = end if eol == -1 else eol + 1
            else:
                return

    def next_token(self):
        """Returns one of: ('num', float|int), ('name', str), ('str', bytes),
        ('kw', str), ('delim', str), or None at end of input."""
        self._skip_ws()
        if self.pos >= self.end:
            return None
        data = self.data
        ch = data[self.pos]

        if ch == 0x2F:  # '/'
            return ("name", self._read_name())
        if ch == 0x28:  # '('
            return ("str", self._read_literal_string())
        if ch == 0x3C:  # '<' or '<<'
            if data.startswith(b"<<", self.pos):
                self.pos += 2
                return ("delim", "<<")
            return ("str", self._read_hex_string())
        if data.startswith(b">>", self.pos):
            self.pos += 2
            return ("delim", ">>")
        if ch in b"[]{}":
            self.pos += 1
            return ("delim", chr(ch))
        if ch == 0x29 or ch == 0x3E:  # stray ')' or '>'
            raise PdfParseError("unbalanced string delimiter")

        start = self.pos
        while (self.pos < self.end
               and data[self.pos] not in _WHITESPACE
               and data[self.pos] not in _DELIMITERS):
            self.pos += 1
        word = data[start:self.pos]
        if not word:
            raise PdfParseError("empty token")
        if re.fullmatch(rb"[+-]?(\d+\.?\d*|\.\d+)", word):
            text = word.decode("ascii")
            return ("num", float(text) if any(c in text for c in ".") else int(text))
        return ("kw", word.decode("latin-1"))

    def _read_name(self) -> str:
        self.pos += 1  # consume '/'
        data = self.data
        out = bytearray()
        while (self.pos < self.end
               and data[self.pos] not in _WHITESPACE
               and data[self.pos] not in _DELIMITERS):
            ch = data[self.pos]
            if ch == 0x23 and self.pos + 2 < self.end:  # '#xx'
                try:
                    out.append(int(data[self.pos + 1:self.pos + 3], 16))
                    self.pos += 3
                    continue
                except ValueError:
                    pass
            out.append(ch)
            self.pos += 1
        return out.decode("latin-1")

    def _read_literal_string(self) -> bytes:
        data = self.data
        self.pos += 1  # consume '('
        depth = 1
        out = bytearray()
        while self.pos < self.end:
            ch = data[self.pos]
            if ch == 0x5C:  # backslash
                self.pos += 1
                if self.pos >= self.end:
                    break
                esc = data[self.pos]
                if esc in b"nrtbf":
                    out.append({0x6E: 10, 0x72: 13, 0x74: 9, 0x62: 8, 0x66: 12}[esc])
                    self.pos += 1
                elif esc in b"()\\":
                    out.append(esc)
                    self.pos += 1
                elif esc == 0x0A:  # line continuation
                    self.pos += 1
                elif esc == 0x0D:
                    self.pos += 1
                    if self.pos < self.end and data[self.pos] == 0x0A:
                        self.pos += 1
                elif 0x30 <= esc <= 0x37:  # octal, up to 3 digits
                    digits = bytearray()
                    while (len(digits) < 3 and self.pos < self.end
                           and 0x30 <= data[self.pos] <= 0x37):
                        digits.append(data[self.pos])
                        self.pos += 1
                    out.append(int(digits, 8) & 0xFF)
                else:
                    out.append(esc)
                    self.pos += 1
                continue
            if ch == 0x28:
                depth += 1
            elif ch == 0x29:
                depth -= 1
                if depth == 0:
                    self.pos += 1
                    return bytes(out)
            out.append(ch)
            self.pos += 1
        raise PdfParseError("unterminated literal string")

    def _read_hex_string(self) -> bytes:
        self.pos += 1  # consume '<'
        close = self.data.find(b">", self.pos)
        if close == -1:
            raise PdfParseError("unterminated hex string")
        hexdigits = re.sub(rb"[^0-9A-Fa-f]", b"", self.data[self.pos:close])
        self.pos = close + 1
        if len(hexdigits) % 2:
            hexdigits += b"0"
        return bytes.fromhex(hexdigits.decode("ascii"))


class _ObjectParser:
    """Recursive-descent parser for PDF object syntax."""

    def __init__(self, lexer: _Lexer):
        self.lexer = lexer
        self._pushback: list = []

    def _next(self):
        if self._pushback:
            return self._pushback.pop()
        return self.lexer.next_token()

    def _push(self, tok) -> None:
        self._pushback.append(tok)

    def parse(self, depth: int = 0):
        if depth > 64:
            raise PdfParseError("object nesting too deep")
        tok = self._next()
        if tok is None:
            raise PdfParseError("unexpected end of data")
        kind, value = tok
        if kind == "num":
            return self._maybe_ref(value)
        if kind in ("name", "str"):
            return value
        if kind == "kw":
            if value == "true":
                return True
            if value == "false":
                return False
            if value == "null":
                return None
            raise PdfParseError(f"unexpected keyword {value!r}")
        if value == "<<":
            return self._parse_dict(depth)
        if value == "[":
            return self._parse_array(depth)
        raise PdfParseError(f"unexpected delimiter {value!r}")

    def _maybe_ref(self, first):
        if isinstance(first, int):
            tok2 = self._next()
            if tok2 is not None and tok2[0] == "num" and isinstance(tok2[1], int):
                tok3 = self._next()
                if tok3 == ("kw", "R"):
                    return Ref(first)
                if tok3 is not None:
                    self._push(tok3)
            if tok2 is not None:
                self._push(tok2)
        return first

    def _parse_dict(self, depth: int) -> dict:
        out = {}
        for _ in range(10_000):
            tok = self._next()
            if tok is None:
                raise PdfParseError("unterminated dictionary")
            if tok == ("delim", ">>"):
                return out
            if tok[0] != "name":
                raise PdfParseError("dictionary key is not a name")
            out[tok[1]] = self.parse(depth + 1)
        raise PdfParseError("dictionary too large")

    def _parse_array(self, depth: int) -> list:
        out = []
        for _ in range(100_000):
            tok = self._next()
            if tok is None:
                raise PdfParseError("unterminated array")
            if tok == ("delim", "]"):
                return out
            self._push(tok)
            out.append(self.parse(depth + 1))
        raise PdfParseError("array too large")


class PdfDocument:
    """Scanned object table plus resolved page list."""

    def __init__(self, data: bytes):
        if len(data) < 8 or b"%PDF-" not in data[:1024]:
            raise PdfParseError("missing %PDF header")
        self.data = data
        self._budget = _MAX_DECOMPRESSED
        self.objects: dict[int, object] = {}
        self.streams: dict[int, bytes] = {}
        self._scan_objects()
        self.pages = self._collect_pages()

    # -- structure ---------------------------------------------------------

    def _scan_objects(self) -> None:
        count = 0
        for match in _OBJ_HEAD.finditer(self.data):
            count += 1
            if count > _MAX_OBJECTS:
                raise PdfParseError("too many objects")
            num = int(match.group(1))
            lexer = _Lexer(self.data, match.end())
            try:
                value = _ObjectParser(lexer).parse()
            except PdfParseError:
                continue  # tolerate one broken object; pages may not need it
            self.objects[num] = value
            tail = self.data[lexer.pos:lexer.pos + 20]
            if tail.lstrip()[:6] == b"stream":
                start = self.data.find(b"stream", lexer.pos) + len(b"stream")
                if self.data[start:start + 2] == b"\r\n":
                    start += 2
                elif self.data[start:start + 1] == b"\n":
                    start += 1
                end = self.data.find(b"endstream", start)
                if end == -1:
                    raise PdfParseError("unterminated stream")
                self.streams[num] = self.data[start:end].rstrip(b"\r\n")

    def resolve(self, value, depth: int = 0):
        for _ in range(32):
            if not isinstance(value, Ref):
                return value
            value = self.objects.get(value.num)
        raise PdfParseError("reference chain too long")

    def _collect_pages(self) -> list[dict]:
        root = None
        for value in self.objects.values():
            if isinstance(value, dict) and value.get("Type") == "Catalog":
                root = value
                break
        pages: list[dict] = []
        if root is not None:
            try:
                self._walk_pages(self.resolve(root.get("Pages")), pages, 0)
            except PdfParseError:
                pages = []
        if not pages:  # fall back to file order
            pages = [v for v in self.objects.values()
                     if isinstance(v, dict) and v.get("Type") == "Page"]
        return pages

    def _walk_pages(self, node, out: list, depth: int) -> None:
        if depth > 32 or not isinstance(node, dict):
            return
        if node.get("Type") == "Page":
            out.append(node)
            return
        for kid in self.resolve(node.get("Kids")) or []:
            self._walk_pages(self.resolve(kid), out, depth + 1)

    # -- streams -----------------------------------------------------------

    def content_streams(self, page: dict) -> list[bytes]:
        contents = self.resolve(page.get("Contents"))
        refs = contents if isinstance(contents, list) else [page.get("Contents")]
        out = []
        for ref in refs:
            resolved_num = ref.num if isinstance(ref, Ref) else None
            if resolved_num is None or resolved_num not in self.streams:
                continue
            decoded = self._decode_stream(resolved_num)
            if decoded is not None:
                out.append(decoded)
        return out

    def font_map(self, page: dict) -> dict[str, str]:
        """Map font resource names (e.g. F1) to base font names."""
        out: dict[str, str] = {}
        resources = self.resolve(page.get("Resources"))
        if not isinstance(resources, dict):
            return out
        fonts = self.resolve(resources.get("Font"))
        if not isinstance(fonts, dict):
            return out
        for name, ref in fonts.items():
            font = self.resolve(ref)
            if isinstance(font, dict) and isinstance(font.get("BaseFont"), str):
                out[name] = font["BaseFont"]
        return out

    def _decode_stream(self, num: int) -> bytes | None:
        raw = self.streams[num]
        info = self.objects.get(num)
        filters = self.resolve(info.get("Filter")) if isinstance(info, dict) else None
        if filters is None:
            filters = []
        elif not isinstance(filters, list):
            filters = [filters]
        data = raw
        for name in filters:
            name = self.resolve(name)
            if name == "ASCII85Decode":
                try:
                    data = base64.a85decode(
                        re.sub(rb"\s", b"", data), adobe=data.rstrip().endswith(b"~>")
                    )
                except ValueError as exc:
                    raise PdfParseError(f"bad ASCII85 stream: {exc}") from exc
            elif name == "ASCIIHexDecode":
                hexdigits = re.sub(rb"[^0-9A-Fa-f]", b"", data.split(b">", 1)[0])
                if len(hexdigits) % 2:
                    hexdigits += b"0"
                data = bytes.fromhex(hexdigits.decode("ascii"))
            elif name == "FlateDecode":
                try:
                    dec = zlib.decompressobj()
                    data = dec.decompress(data, self._budget)
                    if dec.unconsumed_tail:
                        raise PdfParseError("stream exceeds decompression budget")
                except zlib.error as exc:
                    raise PdfParseError(f"bad deflate stream: {exc}") from exc
            else:
                return None  # unsupported filter: contributes no text
            self._budget -= len(data)
            if self._budget < 0:
                raise PdfParseError("decompression budget exhausted")
        return data


def _interpret_text(content: bytes, page_index: int, runs: list[TextRun],
                    font_map: dict[str, str] | None = None) -> None:
    """Run the text-relevant subset of the content-stream machine."""
    font_map = font_map or {}
    lexer = _Lexer(content)
    operands: list = []
    font_size = 12.0  # persists across BT/ET per the graphics state model
    font_name = ""
    leading = 0.0
    scale = 1.0
    lm_x = lm_y = 0.0  # line matrix translation
    gs_stack: list[tuple[float, str, float, float]] = []
    in_text = False

    def emit(raw: bytes) -> None:
        text = raw.decode("latin-1")
        if text:
            runs.append(TextRun(page_index, lm_x, lm_y, font_size * scale, text,
                                font_name))

    def emit_tj_array(items) -> None:
        parts: list[str] = []
        for item in items:
            if isinstance(item, bytes):
                parts.append(item.decode("latin-1"))
            elif isinstance(item, (int, float)) and item < -180:
                parts.append(" ")  # large gap reads as a word break
        text = "".join(parts)
        if text:
            runs.append(TextRun(page_index, lm_x, lm_y, font_size * scale, text,
                                font_name))

    for _ in range(2_000_000):
        tok = lexer.next_token()
        if tok is None:
            return
        kind, value = tok
        if kind in ("num", "name", "str"):
            operands.append(value)
            continue
        if kind == "delim":
            if value == "[":
                operands.append(_ObjectParser(lexer)._parse_array(0))
            elif value == "<<":
                operands.append(_ObjectParser(lexer)._parse_dict(0))
            continue

        op = value
        try:
            if op == "BT":
                in_text = True
                lm_x = lm_y = 0.0
                scale = 1.0
            elif op == "ET":
                in_text = False
            elif op == "Tf" and len(operands) >= 2:
                font_size = float(operands[-1])
                resource = operands[-2]
                if isinstance(resource, str):
                    font_name = font_map.get(resource, resource)
            elif op == "TL" and operands:
                leading = float(operands[-1])
            elif op == "Tm" and len(operands) >= 6:
                a, b, c, d, e, f = (float(v) for v in operands[-6:])
                lm_x, lm_y = e, f
                scale = (c * c + d * d) ** 0.5 or 1.0
            elif op in ("Td", "TD") and len(operands) >= 2:
                tx, ty = float(operands[-2]), float(operands[-1])
                lm_x += tx
                lm_y += ty
                if op == "TD":
                    leading = -ty
            elif op == "T*":
                lm_y -= leading
            elif op == "Tj" and in_text and operands and isinstance(operands[-1], bytes):
                emit(operands[-1])
            elif op == "TJ" and in_text and operands and isinstance(operands[-1], list):
                emit_tj_array(operands[-1])
            elif op == "'" and in_text and operands and isinstance(operands[-1], bytes):
                lm_y -= leading
                emit(operands[-1])
            elif op == '"' and in_text and operands and isinstance(operands[-1], bytes):
                lm_y -= leading
                emit(operands[-1])
            elif op == "q":
                gs_stack.append((font_size, font_name, leading, scale))
                if len(gs_stack) > 256:
                    raise PdfParseError("graphics state stack too deep")
            elif op == "Q" and gs_stack:
                font_size, font_name, leading, scale = gs_stack.pop()
        except (TypeError, ValueError) as exc:
            raise PdfParseError(f"malformed operands for {op!r}: {exc}") from exc
        operands.clear()
    raise PdfParseError("content stream too long")


def extract_runs(pdf_bytes: bytes) -> tuple[list[TextRun], int]:
    """All positioned text runs plus the page count, in page order."""
    doc = PdfDocument(pdf_bytes)
    runs: list[TextRun] = []
    for index, page in enumerate(doc.pages):
        fonts = doc.font_map(page)
        for content in doc.content_streams(page):
            _interpret_text(content, index, runs, fonts)
    return runs, len(doc.pages)

"""
DSL parser using PEG grammar for digit words.
"""

from pathlib import Path as PathLib
from typing import Any, List, Sequence, Union

from parsimonious import Grammar, NodeVisitor
from parsimonious.exceptions import ParseError
from parsimonious.nodes import Node

from ..errors import WordParseError
from .parser import ParsedWord, WordSegment

# Load the PEG grammar
WORD_PEG_PATH = PathLib(__file__).parent / "dsl" / "word.peg"

with open(WORD_PEG_PATH, "r") as f:
    GRAMMAR_TEXT = f.read()

WORD_DSL_GRAMMAR = Grammar(GRAMMAR_TEXT)

_ALLOWED_CHARACTERS = frozenset("pmz()*0123456789 \t")


class WordDSLVisitor(NodeVisitor):
    """
    Builds the segment list of a digit string.
    """

    unwrapped_exceptions = (WordParseError,)

    def __init__(self, text: str):
        self.text = text

    def visit_word(
        self, node: Node, visited_children: Sequence[Any]
    ) -> List[WordSegment]:
        """Entrypoint: a whitespace-separated sequence of terms"""
        _, terms = visited_children
        if isinstance(terms, Node):
            # zero repetitions
            return []
        return [term for term, _ in terms]

    def visit_term(self, node: Node, visited_children: Sequence[Any]) -> WordSegment:
        """Handle `p`, `p*3` and `(zp)*4`"""
        atom, repeat = visited_children
        count = repeat[0] if isinstance(repeat, list) else 1
        if count < 1:
            raise WordParseError(self.text, node.start)
        if isinstance(atom, str):
            return WordSegment.digit(atom, count)
        return WordSegment.group(atom, count)

    def visit_atom(
        self, node: Node, visited_children: Sequence[Any]
    ) -> Union[str, List[WordSegment]]:
        return visited_children[0]

    def visit_group(
        self, node: Node, visited_children: Sequence[Any]
    ) -> List[WordSegment]:
        # visited_children = [lparen, word, rparen]
        return visited_children[1]

    def visit_repeat(self, node: Node, visited_children: Sequence[Any]) -> int:
        # visited_children = [star, count]
        return visited_children[1]

    def visit_count(self, node: Node, visited_children: Sequence[Any]) -> int:
        return int(node.text)

    def visit_digit(self, node: Node, visited_children: Sequence[Any]) -> str:
        return node.text

    def generic_visit(self, node: Node, visited_children: Sequence[Any]) -> Any:
        """Default handler for unspecified rules"""
        return visited_children or node


def parse_word_peg(text: str) -> ParsedWord:
    """
    Parse a digit string into its segments.

    Raises:
        WordParseError: naming the first offending character and its position
    """
    for position, character in enumerate(text):
        if character not in _ALLOWED_CHARACTERS:
            raise WordParseError(text, position)

    try:
        tree = WORD_DSL_GRAMMAR.parse(text)
    except ParseError as e:
        raise WordParseError(text, max(e.pos, 0)) from e

    return ParsedWord(WordDSLVisitor(text).visit(tree))

"""Definition-level palindrome computations on small decompressed strings.

These functions apply the definitions directly to the plain string and share no code
with the index, so agreement between the two is evidence rather than tautology. They
are polynomial in the string length and only suitable for strings of a few hundred
symbols. Positions are 1-based and inclusive.
"""

from collections import Counter
from collections.abc import Hashable, Sequence
from itertools import groupby

PlainString = Sequence[Hashable]


def _is_palindrome(text: PlainString, beg: int, end: int) -> bool:
    return all(
        text[beg - 1 + k] == text[end - 1 - k] for k in range((end - beg + 1) // 2)
    )


def oracle_occurrences(text: PlainString, pattern: PlainString) -> int:
    """Count the possibly overlapping occurrences of ``pattern`` in ``text``.

    Examples:
        >>> oracle_occurrences("aaaa", "aa")
        3
    """

    width = len(pattern)
    if width == 0:
        raise ValueError("The pattern must not be empty")
    target = tuple(pattern)
    return sum(
        1
        for start in range(len(text) - width + 1)
        if tuple(text[start : start + width]) == target
    )


def _palindromic_occurrences(text: PlainString) -> list[tuple[int, int]]:
    """Every palindromic occurrence ``(beg, end)``, by expansion around each centre."""

    n = len(text)
    found = []
    for doubled in range(2, 2 * n + 1):
        beg, end = (doubled + 1) // 2, doubled // 2
        if beg == end:
            found.append((beg, end))
        elif text[beg - 2] != text[end]:
            continue
        else:
            beg, end = beg - 1, end + 1
            found.append((beg, end))
        while beg > 1 and end < n and text[beg - 2] == text[end]:
            beg, end = beg - 1, end + 1
            found.append((beg, end))
    return found


def _palindrome_counts(
    text: PlainString,
) -> tuple[list[tuple[int, int]], Counter[tuple]]:
    """Palindromic occurrences and the number of occurrences of each palindrome.

    Every occurrence of a palindrome is itself a palindromic occurrence, so counting
    the palindromic occurrences by content gives each palindrome's occurrence count.
    """

    occurrences = _palindromic_occurrences(text)
    counts = Counter(tuple(text[beg - 1 : end]) for beg, end in occurrences)
    return occurrences, counts


def oracle_unique_palindromes(text: PlainString) -> list[tuple[int, int]]:
    """All palindromic substrings that occur exactly once, sorted by position."""

    occurrences, counts = _palindrome_counts(text)
    return sorted(
        (beg, end)
        for beg, end in occurrences
        if counts[tuple(text[beg - 1 : end])] == 1
    )


def oracle_mups(text: PlainString) -> list[tuple[int, int]]:
    """All minimal unique palindromic substrings, sorted by position.

    A unique palindrome ``S[i..j]`` is minimal when it has at most two symbols or the
    palindrome ``S[i+1..j-1]`` occurs at least twice.

    Examples:
        >>> oracle_mups("bbbaabbabbaaabbaaabbb")
        [(3, 6), (7, 9), (8, 16), (12, 17)]
    """

    occurrences, counts = _palindrome_counts(text)
    return sorted(
        (beg, end)
        for beg, end in occurrences
        if counts[tuple(text[beg - 1 : end])] == 1
        and (end - beg + 1 <= 2 or counts[tuple(text[beg : end - 1])] >= 2)
    )


def oracle_sups(text: PlainString, s: int, t: int) -> list[tuple[int, int]]:
    """All shortest unique palindromic substrings covering ``[s, t]``.

    Raises:
        ValueError: if ``[s, t]`` is not an interval within the string.
    """

    if not 1 <= s <= t <= len(text):
        raise ValueError(f"Interval [{s},{t}] out of range [1,{len(text)}]")

    covering = []
    for beg in range(1, s + 1):
        for end in range(t, len(text) + 1):
            if _is_palindrome(text, beg, end) and (
                oracle_occurrences(text, text[beg - 1 : end]) == 1
            ):
                covering.append((beg, end))

    if not covering:
        return []
    shortest = min(end - beg for beg, end in covering)
    return sorted((beg, end) for beg, end in covering if end - beg == shortest)


def oracle_sups_all(text: PlainString) -> dict[tuple[int, int], list[tuple[int, int]]]:
    """SUPS answers for every interval of the string at once.

    Unique palindromes are visited from shortest to longest and each one claims the
    intervals it covers that no shorter unique palindrome has claimed. Intervals with
    no SUPS are absent from the result.
    """

    answers: dict[tuple[int, int], list[tuple[int, int]]] = {}
    shortest: dict[tuple[int, int], int] = {}
    unique = sorted(oracle_unique_palindromes(text), key=lambda pal: pal[1] - pal[0])

    for beg, end in unique:
        length = end - beg + 1
        for s in range(beg, end + 1):
            for t in range(s, end + 1):
                best = shortest.setdefault((s, t), length)
                if best == length:
                    answers.setdefault((s, t), []).append((beg, end))

    for found in answers.values():
        found.sort()
    return answers


def oracle_run_centered_maximal(text: PlainString) -> list[int]:
    """Length of the maximal palindrome centred on each run, by character expansion.

    Examples:
        >>> oracle_run_centered_maximal("caabbcccbbaaaac")
        [1, 2, 2, 11, 2, 4, 1]
    """

    n = len(text)
    lengths = []
    run_end = 0
    for _, group in groupby(text):
        run_beg = run_end + 1
        run_end += sum(1 for _ in group)
        beg, end = run_beg, run_end
        while beg > 1 and end < n and text[beg - 2] == text[end]:
            beg, end = beg - 1, end + 1
        lengths.append(end - beg + 1)
    return lengths


def oracle_maximal_palindromes(text: PlainString) -> dict[int, tuple[int, int]]:
    """The maximal palindrome at every doubled centre from 2 to ``2n``.

    Centres between two different symbols give an empty palindrome ``(b, b - 1)``.
    """

    n = len(text)
    maximal = {}
    for doubled in range(2, 2 * n + 1):
        # Odd doubled centres start from the empty palindrome between two symbols
        beg, end = (doubled + 1) // 2, doubled // 2
        while beg > 1 and end < n and text[beg - 2] == text[end]:
            beg, end = beg - 1, end + 1
        maximal[doubled] = (beg, end)
    return maximal


def oracle_distinct_palindromes(text: PlainString) -> int:
    """Count the distinct palindromic substrings, including the empty string.

    Examples:
        >>> oracle_distinct_palindromes("aba")
        4
    """

    _, counts = _palindrome_counts(text)
    return len(counts) + 1

"""Generate the bundled UD-style English training/dev treebank.

Sentences come from a small probabilistic grammar of essay-like English.
Every tree is built top-down and linearised in order, so all output trees are
projective. A slice of the open-class vocabulary is reserved for the dev
split so held-out scores include unseen words.

    python3 tools/gen_treebank.py --out src/lingdiff/data/treebank
"""

import argparse
import os
import random

NOUNS = """
ability access action activity adult advantage advice age agreement area argument art
attention attitude audience author balance behaviour belief benefit book budget business
campaign career case century challenge chance change child choice citizen city class
climate college community company competition computer concern condition confidence
connection consequence content context control cost council country course crime
culture customer damage data debate decade decision demand department design
development device difference difficulty direction discussion disease distance driver
economy education effect effort element employee employer energy environment event
evidence example exam experience expert face factor family farmer feature field film
food freedom friend function future game generation goal government graduate group
growth habit health history home hospital house idea image impact income individual
industry influence information initiative issue job journey knowledge land language
law leader level library life lifestyle literature machine majority manager market
material meal media medicine member method mind minority model moment money month
museum music nation nature need neighbour network news number office opinion
opportunity option organisation owner parent park part passenger patient pattern
period person phone place plan planet player policy population position
practice pressure price problem process product profession profit programme project
property public purpose quality question reason region relationship report research
resource response result risk road role rule safety salary school science screen
season sector service shop skill society software solution source space sport
staff stage standard state step story strategy street stress student study subject
success support survey system task teacher team technology teenager television term
test theory time tourist tourism town tradition traffic training transport trend
trip university user value vehicle view village visitor voice volunteer water way
website week weekend worker workplace world writer year youth
""".split()
IRREGULAR_PLURALS = {
    "child": "children", "person": "people", "man": "men",
    "woman": "women", "life": "lives", "media": "media", "data": "data",
    "news": "news", "staff": "staff", "youth": "youth", "knowledge": "knowledge",
    "information": "information", "advice": "advice", "freedom": "freedom",
    "health": "health", "music": "music", "safety": "safety", "traffic": "traffic",
    "tourism": "tourism", "literature": "literature", "software": "software",
    "public": "public", "evidence": "evidence", "access": "access",
}
MASS_NOUNS = {"information", "advice", "freedom", "health", "music", "safety", "traffic",
              "tourism", "literature", "software", "evidence", "knowledge", "news", "staff",
              "media", "data", "public", "access", "education", "energy", "money", "water",
              "food", "art", "research", "training", "pressure", "stress", "nature", "culture",
              "technology", "transport", "growth", "climate", "content", "support", "damage"}

# base, transitivity ('t' obj, 'i' none, 'c' that-clause, 'x' to-infinitive), irregular past, pp
VERBS = [
    ("accept", "t"), ("achieve", "t"), ("affect", "t"), ("agree", "i"), ("allow", "t"),
    ("appear", "i"), ("apply", "i"), ("argue", "c"), ("arrive", "i"), ("attend", "t"),
    ("avoid", "t"), ("believe", "c"), ("benefit", "i"), ("build", "t", "built", "built"),
    ("buy", "t", "bought", "bought"), ("cause", "t"), ("change", "t"), ("choose", "t", "chose", "chosen"),
    ("claim", "c"), ("compare", "t"), ("complete", "t"), ("consider", "t"), ("contribute", "i"),
    ("create", "t"), ("cut", "t", "cut", "cut"), ("decide", "x"), ("decline", "i"),
    ("depend", "i"), ("describe", "t"), ("develop", "t"), ("die", "i"), ("discover", "t"),
    ("discuss", "t"), ("earn", "t"), ("encourage", "t"), ("enjoy", "t"), ("ensure", "c"),
    ("exist", "i"), ("expect", "x"), ("explain", "t"), ("face", "t"), ("fail", "x"),
    ("feel", "c", "felt", "felt"), ("find", "t", "found", "found"), ("focus", "i"),
    ("gain", "t"), ("give", "t", "gave", "given"), ("grow", "i", "grew", "grown"),
    ("happen", "i"), ("help", "t"), ("hope", "x"), ("ignore", "t"), ("improve", "t"),
    ("include", "t"), ("increase", "t"), ("influence", "t"), ("introduce", "t"),
    ("invest", "i"), ("join", "t"), ("keep", "t", "kept", "kept"), ("know", "c", "knew", "known"),
    ("learn", "t"), ("leave", "t", "left", "left"), ("limit", "t"), ("live", "i"),
    ("lose", "t", "lost", "lost"), ("maintain", "t"), ("make", "t", "made", "made"),
    ("manage", "x"), ("meet", "t", "met", "met"), ("move", "i"), ("need", "x"),
    ("notice", "c"), ("offer", "t"), ("own", "t"), ("pay", "t", "paid", "paid"),
    ("plan", "x"), ("play", "t"), ("prefer", "x"), ("prepare", "t"), ("prevent", "t"),
    ("produce", "t"), ("promote", "t"), ("protect", "t"), ("provide", "t"), ("reach", "t"),
    ("read", "t", "read", "read"), ("realise", "c"), ("receive", "t"), ("reduce", "t"),
    ("reflect", "t"), ("refuse", "x"), ("remain", "i"), ("remember", "c"), ("replace", "t"),
    ("require", "t"), ("rise", "i", "rose", "risen"), ("save", "t"), ("say", "c", "said", "said"),
    ("see", "t", "saw", "seen"), ("seem", "x"), ("sell", "t", "sold", "sold"), ("share", "t"),
    ("show", "t", "showed", "shown"), ("solve", "t"), ("spend", "t", "spent", "spent"),
    ("start", "t"), ("stay", "i"), ("struggle", "i"), ("study", "t"), ("succeed", "i"),
    ("suffer", "i"), ("suggest", "c"), ("support", "t"), ("take", "t", "took", "taken"),
    ("teach", "t", "taught", "taught"), ("tend", "x"), ("think", "c", "thought", "thought"),
    ("travel", "i"), ("try", "x"), ("understand", "t", "understood", "understood"), ("use", "t"),
    ("value", "t"), ("visit", "t"), ("wait", "i"), ("want", "x"), ("waste", "t"), ("watch", "t"),
    ("win", "t", "won", "won"), ("work", "i"), ("worry", "i"), ("write", "t", "wrote", "written"),
]
ADJECTIVES = """
active affordable available bad basic beneficial better big busy cheap clear common
complex convenient crucial current dangerous different difficult digital direct
early easy economic effective efficient enormous essential expensive familiar famous
financial free full general global good great happy harmful healthy high huge
important independent individual interesting international large local long low
main major mental modern national natural necessary negative new normal obvious old
online open physical political poor popular positive possible powerful practical
private professional public quick rapid real recent relevant responsible rich safe
serious significant simple small social special stable strong successful sufficient
traditional typical unable urban useful valuable various vital wealthy whole wide
willing young
""".split()
ADVERBS = """
actually also always clearly certainly constantly directly easily especially
eventually frequently fully generally gradually greatly hardly increasingly
largely likely mainly mostly never now often only particularly perhaps possibly
probably quickly rapidly rarely really recently regularly seriously significantly
simply slowly sometimes still strongly today together usually widely
""".split()
SENTENCE_ADVERBS = ["However", "Moreover", "Furthermore", "Therefore", "Consequently",
                    "Nevertheless", "Additionally", "Overall", "Indeed", "Unfortunately",
                    "Firstly", "Secondly", "Finally", "Similarly", "Instead"]
DEGREE = ["very", "quite", "extremely", "highly", "more", "less", "rather", "too", "so"]
PROPER = ["Britain", "London", "China", "Japan", "Europe", "Australia", "Canada", "India",
          "Germany", "France", "America", "Africa", "Asia", "Sydney", "Paris", "Google",
          "Facebook", "Maria", "John", "Sarah", "David", "Emma", "Ahmed", "Chen"]
PREPOSITIONS = ["in", "on", "at", "for", "with", "from", "about", "of", "by", "to",
                "through", "during", "without", "among", "across", "into", "after",
                "before", "between", "under", "within", "against", "towards", "like"]
NUMBERS = ["two", "three", "four", "five", "ten", "many", "several"]
DIGITS = ["2", "3", "10", "20", "50", "100", "2020", "1990", "30", "15"]
SUBJ_PRONOUNS = [("I", "1s"), ("we", "1p"), ("you", "2"), ("they", "3p"), ("it", "3s"),
                 ("he", "3s"), ("she", "3s")]
OBJ_PRONOUNS = ["them", "it", "us", "me", "him", "her", "you"]
POSS_PRONOUNS = ["their", "our", "its", "his", "her", "my", "your"]
MODALS = ["can", "could", "should", "will", "would", "may", "might", "must"]
ADVCL_MARKS = ["because", "when", "although", "if", "while", "since", "unless", "as",
               "before", "after", "though", "whereas"]
CCOMP_MARKS = ["that"]
REL_PRONOUNS = ["that", "which", "who"]
FREQ_ADVERBS = ["often", "always", "usually", "sometimes", "never", "rarely", "also", "still"]


def pluralise(noun):
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun.endswith("y") and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    if noun.endswith(("s", "sh", "ch", "x")):
        return noun + "es"
    return noun + "s"


def _double_final(base):
    return (len(base) >= 3 and base[-1] in "bdgmnprt" and base[-2] in "aeiou"
            and base[-3] not in "aeiou" and base not in {"visit", "benefit", "limit", "happen",
                                                         "offer", "suffer", "discover", "remember",
                                                         "consider", "develop", "open", "travel",
                                                         "wait", "gain", "earn", "need", "reflect",
                                                         "start", "invest", "complete", "rain"})


def verb_forms(entry):
    base, kind = entry[0], entry[1]
    if base.endswith("y") and base[-2] not in "aeiou":
        s3, ed = base[:-1] + "ies", base[:-1] + "ied"
    elif base.endswith(("s", "sh", "ch", "x")):
        s3, ed = base + "es", base + "ed"
    elif base.endswith("e"):
        s3, ed = base + "s", base + "d"
    elif _double_final(base):
        s3, ed = base + "s", base + base[-1] + "ed"
    else:
        s3, ed = base + "s", base + "ed"
    if base == "die":
        ing = "dying"
    elif base.endswith("e") and not base.endswith("ee"):
        ing = base[:-1] + "ing"
    elif _double_final(base):
        ing = base + base[-1] + "ing"
    else:
        ing = base + "ing"
    if base in ("pay", "say"):
        s3 = base + "s"
    past = entry[2] if len(entry) > 2 else ed
    pp = entry[3] if len(entry) > 3 else ed
    return {"base": base, "s3": s3, "past": past, "pp": pp, "ing": ing, "kind": kind}


class Node:
    __slots__ = ("form", "upos", "xpos", "rel", "left", "right")

    def __init__(self, form, upos, xpos, rel="dep"):
        self.form, self.upos, self.xpos, self.rel = form, upos, xpos, rel
        self.left, self.right = [], []

    def L(self, child, rel=None):
        if rel:
            child.rel = rel
        self.left.append(child)
        return child

    def R(self, child, rel=None):
        if rel:
            child.rel = rel
        self.right.append(child)
        return child


def flatten(root):
    """In-order traversal; returns rows (form, upos, xpos, head, deprel)."""
    order = []

    def walk(node, parent):
        for c in node.left:
            walk(c, node)
        order.append((node, parent))
        for c in node.right:
            walk(c, node)

    walk(root, None)
    index = {id(n): i for i, (n, _) in enumerate(order, start=1)}
    rows = []
    for node, parent in order:
        head = 0 if parent is None else index[id(parent)]
        rows.append([node.form, node.upos, node.xpos, head, "root" if parent is None else node.rel])
    return rows


class Grammar:
    def __init__(self, rng, nouns, verbs, adjectives, adverbs):
        self.rng = rng
        self.nouns = nouns
        self.count_nouns = [n for n in nouns if n not in MASS_NOUNS]
        self.verbs = [verb_forms(v) for v in verbs]
        self.by_kind = {k: [v for v in self.verbs if v["kind"] == k] for k in "ticx"}
        self.adjectives = adjectives
        self.adverbs = adverbs

    def p(self, prob):
        return self.rng.random() < prob

    def pick(self, seq):
        return self.rng.choice(seq)

    # noun phrases -----------------------------------------------------------
    def noun_phrase(self, depth=0, allow_pron=True, number=None):
        """Returns (head node, person/number tag)."""
        r = self.rng.random()
        if allow_pron and r < 0.18:
            form, agr = self.pick(SUBJ_PRONOUNS)
            return Node(form, "PRON", "PRP"), agr
        if r < 0.23:
            name = self.pick(PROPER)
            return Node(name, "PROPN", "NNP"), "3s"
        if number is None:
            number = "p" if self.p(0.5) else "s"
        if number == "s" or self.p(0.15):
            noun = self.pick(self.nouns)
            head = Node(noun, "NOUN", "NN")
            agr = "3s"
            plural = False
        else:
            noun = self.pick(self.count_nouns)
            head = Node(pluralise(noun), "NOUN", "NNS")
            agr = "3p"
            plural = True
        mods = []
        if self.p(0.12):
            comp = self.pick(self.nouns)
            mods.append(Node(comp, "NOUN", "NN", "compound"))
        if self.p(0.35):
            adj = Node(self.pick(self.adjectives), "ADJ", "JJ", "amod")
            if self.p(0.15):
                adj.L(Node(self.pick(DEGREE), "ADV", "RB"), "advmod")
            mods.append(adj)
            if self.p(0.1):
                mods.append(Node(self.pick(self.adjectives), "ADJ", "JJ", "amod"))
        for m in reversed(mods):
            head.left.insert(0, m)
        det = self._determiner(plural, noun)
        if det is not None:
            head.left.insert(0, det)
        if depth < 2 and self.p(0.18):
            head.R(self.prep_phrase(depth + 1), "nmod")
        elif depth < 1 and self.p(0.08):
            head.R(self.relative_clause(agr, depth + 1), "acl:relcl")
        if depth < 1 and self.p(0.05):
            cc = Node(self.pick(["and", "or"]), "CCONJ", "CC", "cc")
            other, _ = self.noun_phrase(depth + 1, allow_pron=False)
            other.left.insert(0, cc)
            head.R(other, "conj")
            agr = "3p"
        return head, agr

    def _determiner(self, plural, noun):
        r = self.rng.random()
        if r < 0.12:
            return Node(self.pick(POSS_PRONOUNS), "PRON", "PRP$", "nmod:poss")
        if r < 0.16 and plural:
            num = self.pick(NUMBERS + DIGITS)
            xpos = "JJ" if num in ("many", "several") else "CD"
            upos = "ADJ" if xpos == "JJ" else "NUM"
            return Node(num, upos, xpos, "amod" if upos == "ADJ" else "nummod")
        if r < 0.2:
            return None
        if plural:
            if r < 0.55:
                return Node(self.pick(["the", "these", "those", "some", "all", "most", "few",
                                       "both", "any", "such"]), "DET", "DT", "det")
            if r < 0.7:
                return Node("the", "DET", "DT", "det")
            return None
        if noun in MASS_NOUNS:
            if r < 0.6:
                return Node(self.pick(["the", "this", "that", "much", "some", "no"]), "DET", "DT", "det")
            return None
        art = "an" if noun[0] in "aeiou" else "a"
        return Node(self.pick(["the", "the", art, art, "this", "that", "each", "every",
                               "another", "no"]), "DET", "DT", "det")

    def prep_phrase(self, depth=1):
        obj, _ = self.noun_phrase(depth + 1, allow_pron=self.p(0.3))
        if obj.upos == "PRON" and obj.xpos == "PRP":
            obj.form = self.pick(OBJ_PRONOUNS)
        obj.left.insert(0, Node(self.pick(PREPOSITIONS), "ADP", "IN", "case"))
        return obj

    def relative_clause(self, agr, depth):
        rel = Node(self.pick(REL_PRONOUNS), "PRON", "WDT", "nsubj")
        verb = self.verb_group(agr, depth, subject=rel, kinds="ti")
        return verb

    # verbs ------------------------------------------------------------------
    def _finite(self, v, agr, tense):
        if tense == "past":
            return v["past"], "VBD"
        if agr == "3s":
            return v["s3"], "VBZ"
        return v["base"], "VBP"

    def _be(self, agr, tense):
        if tense == "past":
            return ("were", "VBD") if agr in ("3p", "1p", "2") else ("was", "VBD")
        return {"1s": ("am", "VBP"), "3s": ("is", "VBZ")}.get(agr, ("are", "VBP"))

    def _have(self, agr, tense):
        if tense == "past":
            return "had", "VBD"
        return ("has", "VBZ") if agr == "3s" else ("have", "VBP")

    def _do(self, agr, tense):
        if tense == "past":
            return "did", "VBD"
        return ("does", "VBZ") if agr == "3s" else ("do", "VBP")

    def verb_group(self, agr, depth, subject=None, kinds="tcxi"):
        """Build a clause headed by a verb (or copular predicate); attaches ``subject``."""
        tense = "past" if self.p(0.3) else "pres"
        r = self.rng.random()
        kind = self.pick(kinds)
        pool = self.by_kind.get(kind) or self.by_kind["t"]
        v = self.pick(pool)
        pre = []   # left dependents of the head, in order
        subj_rel = "nsubj"
        if r < 0.14:
            # copula
            pred = self._copular_predicate()
            form, xpos = self._be(agr, tense)
            if self.p(0.2):
                modal = Node(self.pick(MODALS), "AUX", "MD", "aux")
                pre.append(modal)
                form, xpos = "be", "VB"
            cop = Node(form, "AUX", xpos, "cop")
            pre.append(cop)
            if self.p(0.12):
                pre.append(Node("not", "PART", "RB", "advmod"))
            head = pred
            for n in reversed(pre):
                head.left.insert(0, n)
            if subject is not None:
                head.left.insert(0, subject)
                subject.rel = "nsubj"
            if depth < 2 and self.p(0.15):
                head.R(self.prep_phrase(depth + 1), "obl")
            return head
        if r < 0.24 and kind == "t":
            # passive
            head = Node(v["pp"], "VERB", "VBN")
            if self.p(0.25):
                pre.append(Node(self.pick(MODALS), "AUX", "MD", "aux"))
                pre.append(Node("be", "AUX", "VB", "aux:pass"))
            elif self.p(0.2):
                form, xpos = self._have(agr, tense)
                pre.append(Node(form, "AUX", xpos, "aux"))
                pre.append(Node("been", "AUX", "VBN", "aux:pass"))
            else:
                form, xpos = self._be(agr, tense)
                pre.append(Node(form, "AUX", xpos, "aux:pass"))
            if self.p(0.15):
                pre.append(Node(self.pick(ADVERBS), "ADV", "RB", "advmod"))
            subj_rel = "nsubj:pass"
            for n in pre:
                head.L(n)
            if subject is not None:
                head.left.insert(0, subject)
                subject.rel = subj_rel
            if self.p(0.35):
                agent, _ = self.noun_phrase(depth + 1, allow_pron=False)
                agent.left.insert(0, Node("by", "ADP", "IN", "case"))
                head.R(agent, "obl")
            elif depth < 2 and self.p(0.3):
                head.R(self.prep_phrase(depth + 1), "obl")
            return head
        r2 = self.rng.random()
        if r2 < 0.16:
            pre.append(Node(self.pick(MODALS), "AUX", "MD", "aux"))
            if self.p(0.15):
                pre.append(Node("not", "PART", "RB", "advmod"))
            head = Node(v["base"], "VERB", "VB")
        elif r2 < 0.24:
            form, xpos = self._be(agr, tense)
            pre.append(Node(form, "AUX", xpos, "aux"))
            head = Node(v["ing"], "VERB", "VBG")
        elif r2 < 0.32:
            form, xpos = self._have(agr, tense)
            pre.append(Node(form, "AUX", xpos, "aux"))
            head = Node(v["pp"], "VERB", "VBN")
        elif r2 < 0.38:
            form, xpos = self._do(agr, tense)
            pre.append(Node(form, "AUX", xpos, "aux"))
            pre.append(Node("not", "PART", "RB", "advmod"))
            head = Node(v["base"], "VERB", "VB")
        else:
            form, xpos = self._finite(v, agr, tense)
            head = Node(form, "VERB", xpos)
        if self.p(0.12):
            pre.append(Node(self.pick(FREQ_ADVERBS), "ADV", "RB", "advmod"))
        for n in pre:
            head.L(n)
        if subject is not None:
            head.left.insert(0, subject)
            subject.rel = subj_rel
        self._complements(head, v, depth)
        return head

    def _copular_predicate(self):
        if self.p(0.65):
            adj = Node(self.pick(self.adjectives), "ADJ", "JJ")
            if self.p(0.3):
                adj.L(Node(self.pick(DEGREE), "ADV", "RB"), "advmod")
            if self.p(0.15):
                inf = self._infinitive(2)
                adj.R(inf, "xcomp")
            return adj
        np, _ = self.noun_phrase(2, allow_pron=False, number="s")
        return np

    def _infinitive(self, depth):
        v = self.pick(self.by_kind["t"] + self.by_kind["i"])
        head = Node(v["base"], "VERB", "VB")
        head.L(Node("to", "PART", "TO"), "mark")
        self._complements(head, v, depth + 1)
        return head

    def _complements(self, head, v, depth):
        kind = v["kind"]
        if kind == "t":
            obj, _ = self.noun_phrase(depth + 1)
            if obj.upos == "PRON" and obj.xpos == "PRP":
                obj.form = self.pick(OBJ_PRONOUNS)
            head.R(obj, "obj")
        elif kind == "x" and depth < 3:
            head.R(self._infinitive(depth), "xcomp")
        elif kind == "c" and depth < 2:
            subj, agr = self.noun_phrase(depth + 1)
            clause = self.verb_group(agr, depth + 1, subject=subj, kinds="ti")
            if self.p(0.75):
                clause.left.insert(0, Node("that", "SCONJ", "IN", "mark"))
            head.R(clause, "ccomp")
        if self.p(0.1):
            head.R(Node(self.pick(self.adverbs), "ADV", "RB"), "advmod")
        if depth < 3 and self.p(0.3):
            head.R(self.prep_phrase(depth + 1), "obl")

    # clauses ----------------------------------------------------------------
    def clause(self, depth=0):
        if depth == 0 and self.p(0.05):
            return self._existential()
        subj, agr = self.noun_phrase(depth)
        return self.verb_group(agr, depth, subject=subj)

    def _existential(self):
        np, agr = self.noun_phrase(1, allow_pron=False)
        tense = "past" if self.p(0.3) else "pres"
        form, xpos = self._be(agr, tense)
        head = Node(form, "VERB", xpos)
        head.L(Node("there", "PRON", "EX"), "expl")
        head.R(np, "nsubj")
        if self.p(0.5):
            head.R(self.prep_phrase(2), "obl")
        return head

    def sentence(self):
        root = self.clause()
        r = self.rng.random()
        if r < 0.14:
            adv = Node(self.pick(SENTENCE_ADVERBS), "ADV", "RB")
            adv.R(Node(",", "PUNCT", ","), "punct")
            root.left.insert(0, adv)
            adv.rel = "advmod"
        elif r < 0.22:
            pp = self.prep_phrase(2)
            pp.R(Node(",", "PUNCT", ","), "punct")
            root.left.insert(0, pp)
            pp.rel = "obl"
        elif r < 0.32:
            sub = self.clause(2)
            sub.left.insert(0, Node(self.pick(ADVCL_MARKS), "SCONJ", "IN", "mark"))
            sub.R(Node(",", "PUNCT", ","), "punct")
            root.left.insert(0, sub)
            sub.rel = "advcl"
        r = self.rng.random()
        if r < 0.14:
            sub = self.clause(2)
            sub.left.insert(0, Node(self.pick(ADVCL_MARKS), "SCONJ", "IN", "mark"))
            root.R(sub, "advcl")
        elif r < 0.28:
            other = self.clause(2)
            if self.p(0.5):
                other.left.insert(0, Node(",", "PUNCT", ",", "punct"))
            other.left.insert(1 if other.left and other.left[0].form == "," else 0,
                              Node(self.pick(["and", "but", "or", "so", "yet"]), "CCONJ", "CC", "cc"))
            root.R(other, "conj")
        root.R(Node(self.pick([".", ".", ".", ".", "!", "?"]) if self.p(0.05) else ".",
                    "PUNCT", "."), "punct")
        rows = flatten(root)
        return self._finish(rows)

    def _finish(self, rows):
        first = rows[0]
        if first[1] != "PROPN" and first[0] != "I":
            first[0] = first[0][:1].upper() + first[0][1:]
        if self.p(0.15):
            rows = self._contract(rows)
        return rows

    def _contract(self, rows):
        """Turn 'do not'/'is not'/'can not' into clitic tokens the way UD splits them."""
        out = [list(r) for r in rows]
        for i in range(len(out) - 1):
            a, b = out[i], out[i + 1]
            if a[1] == "AUX" and b[0] == "not" and a[0].lower() in {
                    "do", "does", "did", "is", "are", "was", "were", "can", "could", "should",
                    "would", "will", "must", "has", "have", "had"}:
                b[0] = "n't"
                if a[0].lower() == "will":
                    a[0] = "wo" if a[0] == "will" else "Wo"
                elif a[0].lower() == "can":
                    a[0] = "ca" if a[0] == "can" else "Ca"
                break
        return out


def write_split(sentences, path, prefix):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        doc = 0
        for n, rows in enumerate(sentences, start=1):
            if (n - 1) % 20 == 0:
                doc += 1
                fh.write(f"# newdoc id = {prefix}-{doc:04d}\n")
            fh.write(f"# sent_id = {prefix}-{n:05d}\n")
            fh.write("# text = " + " ".join(r[0] for r in rows) + "\n")
            for i, (form, upos, xpos, head, rel) in enumerate(rows, start=1):
                fh.write(f"{i}\t{form}\t_\t{upos}\t{xpos}\t_\t{head}\t{rel}\t_\t_\n")
            fh.write("\n")


def split_vocab(rng, words, held_frac):
    words = sorted(set(words))
    rng.shuffle(words)
    k = int(len(words) * held_frac)
    return sorted(words[k:]), sorted(words[:k])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="src/lingdiff/data/treebank")
    ap.add_argument("--train", type=int, default=4000, help="training sentences")
    ap.add_argument("--dev", type=int, default=800, help="held-out sentences")
    ap.add_argument("--seed", type=int, default=20240601)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    nouns_tr, nouns_dev = split_vocab(rng, NOUNS, 0.15)
    adjs_tr, adjs_dev = split_vocab(rng, ADJECTIVES, 0.15)
    advs_tr, advs_dev = split_vocab(rng, ADVERBS, 0.15)
    verb_names = sorted(v[0] for v in VERBS)
    rng.shuffle(verb_names)
    held_verbs = set(verb_names[: int(len(verb_names) * 0.15)])
    verbs_tr = [v for v in VERBS if v[0] not in held_verbs]

    train = Grammar(random.Random(args.seed + 1), nouns_tr, verbs_tr, adjs_tr, advs_tr)
    # dev mixes seen and held-out vocabulary
    dev = Grammar(random.Random(args.seed + 2), NOUNS, VERBS, ADJECTIVES, ADVERBS)
    os.makedirs(args.out, exist_ok=True)
    write_split([train.sentence() for _ in range(args.train)],
                os.path.join(args.out, "train.conllu"), "train")
    write_split([dev.sentence() for _ in range(args.dev)],
                os.path.join(args.out, "dev.conllu"), "dev")
    print(f"wrote {args.train} train and {args.dev} dev sentences to {args.out}")
    print(f"held-out vocabulary: {len(nouns_dev)} nouns, {len(held_verbs)} verbs, "
          f"{len(adjs_dev)} adjectives, {len(advs_dev)} adverbs")


if __name__ == "__main__":
    main()

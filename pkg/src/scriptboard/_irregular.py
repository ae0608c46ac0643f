"""Irregular verb table: past / past-participle surface -> lemma.

Used when a parse row carries no usable lemma; everything else falls back
to suffix stripping.
"""

IRREGULAR_PAST = {
    "arose": "arise", "arisen": "arise",
    "awoke": "awake", "awoken": "awake",
    "ate": "eat", "eaten": "eat",
    "beat": "beat", "beaten": "beat",
    "became": "become", "become": "become",
    "began": "begin", "begun": "begin",
    "bent": "bend",
    "bet": "bet",
    "bit": "bite", "bitten": "bite",
    "bled": "bleed",
    "blew": "blow", "blown": "blow",
    "broke": "break", "broken": "break",
    "brought": "bring",
    "built": "build",
    "burnt": "burn",
    "burst": "burst",
    "bought": "buy",
    "caught": "catch",
    "chose": "choose", "chosen": "choose",
    "clung": "cling",
    "came": "come",
    "cost": "cost",
    "crept": "creep",
    "cut": "cut",
    "dealt": "deal",
    "dug": "dig",
    "did": "do", "done": "do",
    "drew": "draw", "drawn": "draw",
    "drank": "drink", "drunk": "drink",
    "drove": "drive", "driven": "drive",
    "fell": "fall", "fallen": "fall",
    "fed": "feed",
    "felt": "feel",
    "fought": "fight",
    "found": "find",
    "fled": "flee",
    "flew": "fly", "flown": "fly",
    "forbade": "forbid", "forbidden": "forbid",
    "forgot": "forget", "forgotten": "forget",
    "forgave": "forgive", "forgiven": "forgive",
    "froze": "freeze", "frozen": "freeze",
    "got": "get", "gotten": "get",
    "gave": "give", "given": "give",
    "went": "go", "gone": "go",
    "grew": "grow", "grown": "grow",
    "hung": "hang",
    "had": "have",
    "heard": "hear",
    "hid": "hide", "hidden": "hide",
    "hit": "hit",
    "held": "hold",
    "hurt": "hurt",
    "kept": "keep",
    "knelt": "kneel",
    "knew": "know", "known": "know",
    "laid": "lay",
    "led": "lead",
    "leant": "lean",
    "leapt": "leap",
    "learnt": "learn",
    "left": "leave",
    "lent": "lend",
    "lay": "lie", "lain": "lie",
    "lit": "light",
    "lost": "lose",
    "made": "make",
    "meant": "mean",
    "met": "meet",
    "paid": "pay",
    "put": "put",
    "quit": "quit",
    "read": "read",
    "rid": "rid",
    "rode": "ride", "ridden": "ride",
    "rang": "ring", "rung": "ring",
    "rose": "rise", "risen": "rise",
    "ran": "run",
    "said": "say",
    "saw": "see", "seen": "see",
    "sought": "seek",
    "sold": "sell",
    "sent": "send",
    "set": "set",
    "shook": "shake", "shaken": "shake",
    "shone": "shine",
    "shot": "shoot",
    "showed": "show", "shown": "show",
    "shrank": "shrink", "shrunk": "shrink",
    "shut": "shut",
    "sang": "sing", "sung": "sing",
    "sank": "sink", "sunk": "sink",
    "sat": "sit",
    "slept": "sleep",
    "slid": "slide",
    "spoke": "speak", "spoken": "speak",
    "sped": "speed",
    "spent": "spend",
    "spilt": "spill",
    "spun": "spin",
    "spat": "spit",
    "split": "split",
    "spread": "spread",
    "sprang": "spring", "sprung": "spring",
    "stood": "stand",
    "stole": "steal", "stolen": "steal",
    "stuck": "stick",
    "stung": "sting",
    "stank": "stink", "stunk": "stink",
    "struck": "strike",
    "swore": "swear", "sworn": "swear",
    "swept": "sweep",
    "swam": "swim", "swum": "swim",
    "swung": "swing",
    "took": "take", "taken": "take",
    "taught": "teach",
    "tore": "tear", "torn": "tear",
    "told": "tell",
    "thought": "think",
    "threw": "throw", "thrown": "throw",
    "understood": "understand",
    "woke": "wake", "woken": "wake",
    "wore": "wear", "worn": "wear",
    "wove": "weave", "woven": "weave",
    "wept": "weep",
    "won": "win",
    "wound": "wind",
    "withdrew": "withdraw", "withdrawn": "withdraw",
    "wrung": "wring",
    "wrote": "write", "written": "write",
    "was": "be", "were": "been", "been": "be",
    "bore": "bear", "born": "bear", "borne": "bear",
    "bound": "bind",
    "bred": "breed",
    "broadcast": "broadcast",
    "cast": "cast",
    "dreamt": "dream",
    "hanged": "hang",
    "knit": "knit",
    "lied": "lie",
    "mislaid": "mislay",
    "mistook": "mistake", "mistaken": "mistake",
    "mowed": "mow", "mown": "mow",
    "overcame": "overcome", "overcome": "overcome",
    "overtook": "overtake", "overtaken": "overtake",
    "proved": "prove", "proven": "prove",
    "rewound": "rewind",
    "sawed": "saw", "sawn": "saw",
    "sewed": "sew", "sewn": "sew",
    "shaved": "shave", "shaven": "shave",
    "sheared": "shear", "shorn": "shear",
    "slain": "slay", "slew": "slay",
    "slit": "slit",
    "smelt": "smell",
    "sowed": "sow", "sown": "sow",
    "spelt": "spell",
    "spoilt": "spoil",
    "strode": "stride", "stridden": "stride",
    "strove": "strive", "striven": "strive",
    "sweat": "sweat",
    "swelled": "swell", "swollen": "swell",
    "thrust": "thrust",
    "trod": "tread", "trodden": "tread",
    "undid": "undo", "undone": "undo",
    "upset": "upset",
    "wed": "wed",
    "wet": "wet",
    "withheld": "withhold",
    "withstood": "withstand",
}

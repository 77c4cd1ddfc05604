#!/usr/bin/env python3
"""Regenerates the bundled default corpus under src/slicetype/data/.

The unigram list is a hand-curated English frequency lexicon: explicit
per-million rates for the high-frequency core, banded rates for the long
tail, rule-based inflection (plurals, verb forms, -ly/-er/-est) to expand
base entries into their common surface forms, and an explicit table for
irregular verbs so no fake past tenses are generated.  The bigram list is
extracted from a few short passages of classic public-domain prose,
restricted to word pairs whose members are both in the unigram lexicon.

Run from the repository root:

    python scripts/build_default_corpus.py

The output files are plain text, one entry per line:

    unigrams.txt:  word<TAB>count
    bigrams.txt:   prev<TAB>next<TAB>count

Counts are scaled to a nominal 30M-token corpus so relative magnitudes
stay realistic while remaining small integers.
"""

from __future__ import annotations

import re
from collections import Counter
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "src" / "slicetype" / "data"

TOKENS_PER_MILLION = 30.0  # count = pm * this

# Inflection rates relative to the base form.
PLURAL_F = 0.35
THIRD_F = 0.18
PAST_F = 0.45
PART_F = 0.22
GERUND_F = 0.30
LY_F = 0.22
ER_F = 0.10
EST_F = 0.06

VOWELS = "aeiou"


# ---------------------------------------------------------------------------
# Inflection rules
# ---------------------------------------------------------------------------

def s_form(w: str) -> str:
    if w.endswith(("s", "x", "z", "ch", "sh", "o")):
        return w + "es"
    if len(w) > 1 and w.endswith("y") and w[-2] not in VOWELS:
        return w[:-1] + "ies"
    return w + "s"


def past_form(w: str, double: bool) -> str:
    if w.endswith("e"):
        return w + "d"
    if len(w) > 1 and w.endswith("y") and w[-2] not in VOWELS:
        return w[:-1] + "ied"
    if double:
        return w + w[-1] + "ed"
    return w + "ed"


def gerund_form(w: str, double: bool) -> str:
    if w.endswith("ie"):
        return w[:-2] + "ying"
    if w.endswith("e") and not w.endswith("ee"):
        return w[:-1] + "ing"
    if double:
        return w + w[-1] + "ing"
    return w + "ing"


def ly_form(w: str) -> str:
    if len(w) > 1 and w.endswith("y") and w[-2] not in VOWELS:
        return w[:-1] + "ily"
    if w.endswith("le"):
        return w[:-1] + "y"
    if w.endswith("ic"):
        return w + "ally"
    return w + "ly"


def er_form(w: str, double: bool) -> str:
    if w.endswith("e"):
        return w + "r"
    if len(w) > 1 and w.endswith("y") and w[-2] not in VOWELS:
        return w[:-1] + "ier"
    if double:
        return w + w[-1] + "er"
    return w + "er"


def est_form(w: str, double: bool) -> str:
    if w.endswith("e"):
        return w + "st"
    if len(w) > 1 and w.endswith("y") and w[-2] not in VOWELS:
        return w[:-1] + "iest"
    if double:
        return w + w[-1] + "est"
    return w + "est"


def expand(word: str, pm: float, flags: str) -> list[tuple[str, float]]:
    """Base entry plus inflected forms per its flags.

    Flags: n = noun plural, v = regular verb (3rd/past/gerund), D =
    final-consonant doubling, a = adjective -er/-est, l = adverb in -ly.
    Irregular verbs are listed in IRREGULAR_VERBS instead of taking v.
    """
    double = "D" in flags
    out = [(word, pm)]
    if "n" in flags:
        out.append((s_form(word), pm * PLURAL_F))
    if "v" in flags:
        out.append((s_form(word), pm * THIRD_F))
        out.append((past_form(word, double), pm * PAST_F))
        out.append((gerund_form(word, double), pm * GERUND_F))
    if "a" in flags:
        out.append((er_form(word, double), pm * ER_F))
        out.append((est_form(word, double), pm * EST_F))
    if "l" in flags:
        out.append((ly_form(word), pm * LY_F))
    return out


# ---------------------------------------------------------------------------
# Irregular verbs: "pm base[+] past [participle]".  A trailing + on the
# base marks final-consonant doubling for the gerund (run+ -> running).
# 3rd person and gerund are generated by rule; past and participle are
# written out so nothing like "maked" can appear.
# ---------------------------------------------------------------------------

IRREGULAR_VERBS = """
1000 do did done
490 make made
430 get+ got
380 know knew known
330 come came come
320 go went gone
320 see saw seen
310 take took taken
300 think thought
265 say said
200 give gave given
180 set+ set
165 put+ put
165 become became become
160 find found
155 tell told
150 mean meant
140 meet met
130 lead led
128 understand understood
120 break broke broken
115 keep kept
110 feel felt
105 let+ let
100 hold held
100 bring brought
95 hear heard
90 stand stood
85 leave left
80 speak spoke spoken
75 lose lost
70 sit+ sat
70 win+ won
60 begin+ began begun
60 fall fell fallen
60 eat ate eaten
55 wear wore worn
55 write wrote written
50 choose chose chosen
50 run+ ran run
45 grow grew grown
45 drive drove driven
40 buy bought
40 spend spent
40 catch caught
38 draw drew drawn
35 rise rose risen
35 send sent
35 build built
32 teach taught
30 throw threw thrown
30 fight fought
28 fly flew flown
28 shake shook shaken
26 pay paid
25 wake woke woken
25 steal stole stolen
24 hide hid hidden
24 strike struck
22 drink drank drunk
22 stick stuck
20 deal dealt
20 hit+ hit
20 tear tore torn
19 read read
18 sing sang sung
18 sleep slept
16 seek sought
16 sell sold
15 beat beat beaten
15 shoot shot
14 feed fed
14 swim+ swam swum
13 arise arose arisen
13 ride rode ridden
12 bear bore borne
12 cut+ cut
12 quit+ quit
12 shine shone
11 bend bent
11 shut+ shut
10 hang hung
10 slide slid
10 spread spread
10 sweep swept
9 bind bound
9 bite bit bitten
9 blow blew blown
9 swear swore sworn
8 breed bred
8 cling clung
8 dig+ dug
8 spin+ spun
8 split+ split
8 swing swung
7 burst burst
7 cast cast
7 flee fled
7 freeze froze frozen
7 grind ground
7 lend lent
7 overcome overcame overcome
6 forbid+ forbade forbidden
6 forget+ forgot forgotten
6 kneel knelt
6 shrink shrank shrunk
6 sting stung
6 stride strode
6 thrust thrust
6 undergo underwent undergone
6 undertake undertook undertaken
6 undo undid undone
6 uphold upheld
6 upset+ upset
6 awake awoke awoken
5 hurt hurt
5 overtake overtook overtaken
5 rebuild rebuilt
5 repay repaid
5 weep wept
5 withdraw withdrew withdrawn
5 withstand withstood
5 wring wrung
"""


def parse_irregulars(block: str) -> list[tuple[str, float]]:
    out: list[tuple[str, float]] = []
    for raw in block.strip().splitlines():
        parts = raw.split()
        if not parts:
            continue
        pm = float(parts[0])
        base = parts[1]
        double = base.endswith("+")
        base = base.rstrip("+")
        past = parts[2]
        part = parts[3] if len(parts) > 3 else None
        out.append((base, pm))
        out.append((s_form(base), pm * THIRD_F))
        out.append((gerund_form(base, double), pm * GERUND_F))
        if past != base:
            out.append((past, pm * PAST_F))
        if part and part not in (base, past):
            out.append((part, pm * PART_F))
    return out


# ---------------------------------------------------------------------------
# Lexicon.  Each line: "<pm> | entry entry ..." where an entry is
# word[:flags].  Within a line, rates decay slightly by position so band
# members keep a strict frequency order.
# ---------------------------------------------------------------------------

LEXICON = """
71400 | the
41600 | of
30400 | and
26000 | to
22700 | in
20600 | a
11300 | is
10800 | that
8800  | for
7700  | it as
7400  | was
7000  | with
6500  | be
6300  | by
6200  | on
6100  | not
5500  | he
5200  | i
5100  | this
5000  | are
4900  | or his
4700  | from
4600  | at
4200  | which
3800  | but
3700  | have an
3500  | had
3300  | they
3100  | you were
2900  | their one
2800  | all we
2200  | can her has there been
2100  | if more
2000  | when will would who
1900  | so no
1700  | she
1650  | other
1600  | its may
1550  | these
1500  | what them than
1450  | some
1400  | him time:n
1350  | into
1300  | only do
1250  | such my
1200  | new:a about
1150  | out
1100  | also two
1050  | any up
1000  | first could our
950   | then
900   | most said
880   | over
850   | like:v now
800   | me your man
780   | even
750   | made after
730   | did
720   | many
700   | before
680   | must
650   | through years am
640   | where
620   | much going
600   | way:n well
590   | down
580   | should
570   | because
560   | each
550   | just those
540   | people how
530   | too
520   | little
500   | state:n good very
480   | world:n
470   | still
450   | own men work:v
430   | long get here
420   | between both life being
400   | under never day:n same know
390   | another
380   | while
370   | last
360   | might us
350   | great:a old:a year:n
330   | off come go
320   | since against came won
310   | right:n used
300   | take three want:v without place:n
290   | however found again part:n general house:n
280   | during number:n always public upon school:n
270   | every think say hand:n point:n
260   | eyes water:n once himself away system:n
250   | does got united left few use:v
240   | city:n although
230   | government brought night:n
220   | around went young:a national really
210   | course case:n thing:n among mind:n
200   | look:v until children head:n side:n
190   | whose home:n power:n present:l
185   | within next white:a seen group:n
180   | country:n knew member:n
175   | began toward almost days given
170   | door:n face:n interest:n something put
165   | church:n become told times
160   | brother:n feet better need:v less best
155   | nothing land:n already enough form:n
150   | quickly along development war:n taken
145   | felt light:n thought:n change:v thus
140   | show:v help:v human yet turn:v
135   | making five party:n room:n local
130   | asked social second hard:a whole name:n
125   | took end:n result:n open:v large:a body:n
120   | quick:a play:v though law:n rather study:v
115   | early fact:n able action:n per field:n
110   | dog:n keep car:n others period:n
105   | let real money across
100   | broad:l history:n bring moment:n common example:n
95    | business:n question:v girl:n today different woman
92    | window:n
90    | zero:n input:n women available problem:n program:n
85    | brown certain:l kind:n matter:n area:n several
80    | words word:n big:aD themselves anything writing
75    | king:n department:n boy:n done receive:v
70    | provide:v million:n service:n line:n book:n idea:n
65    | increase:v air:n plan:vD level:n student:n value:n
60    | jump:v process:n close:v nature:n hour:n leave
55    | family:n story:n god force:n cost:n road:n
50    | view:n society:n gone reason:n town:n
48    | important high:al
45    | run short:a art:n class:n care:v speak winter:n
42    | wine:n wind:n
40    | walk:v follow:v table:n paper:n month:n
38    | music:n college:n control:v figure:n
36    | report:v friend:n sense:n special:l economic low:a
35    | lazy office:n person:n further support:v
34    | doctor:n effect:n stand community:n america
33    | clear:al single morning:n complete:l record:n
32    | summer:n half wife major season:n president
31    | six game:n age:n ground:n basis court:n
30    | learn:v earth:n market:n food:n ago
29    | center:n west north south east strong:al
28    | usually move:v various street:n deep:al simple winning
27    | red:aD black:a blue:a green:a answer:v
26    | free:al return:v build piece:n pay
25    | fox:n hold trade:n color:n stage:n
24    | seven eight nine ten hundred:n thousand:n
23    | letter:n space:n ship:n situation:n stock:n
22    | attention:n army:n size:n material:n
21    | technology:n spring:n series rate:n
20    | start:v stop:vD watch:v listen:v send
"""

# Explicit high-frequency forms and additional vocabulary.
EXTRA = """
295 | says
292 | looking
235 | looked
180 | information
178 | having
176 | saying
168 | thinking
166 | makes
164 | giving
162 | coming
160 | knows
156 | turned
154 | means mean
150 | held
148 | saw
146 | seemed seem:v
144 | born
138 | heard
136 | ran
134 | paid
132 | lost
130 | led
128 | understood
126 | sat
124 | stood
122 | spoke spoken
120 | broke broken
118 | chose chosen
116 | wore worn
114 | sent
112 | ate eaten
110 | flew flown
108 | forgot forgotten
106 | gave
104 | lay lain lie:v
102 | laid
"""

EXTRA2 = """
95 | act:v add:v ability:n above accept:v
92 | account:n achieve:v acquire:v
90 | actual:l address:v administration:n
88 | advance:v advantage:n adventure:n advice
86 | affair:n affect:v afford:v afraid afternoon:n
84 | agency:n agent:n agree:v agreement:n ahead
82 | aid:n aim:v alive allow:v
80 | alone alternative:n american:n amount:n
78 | analysis ancient anger:n angle:n angry
76 | animal:n announce:v annual:l apart apartment:n
74 | appeal:v appear:v apple:n application:n apply:v
72 | appoint:v approach:v appropriate april
70 | argue:v argument:n arise arm:n arrange:v
68 | arrival:n arrive:v article:n artist:n
66 | aside ask:v aspect:n assume:v attack:v
64 | attempt:v attend:v attitude:n audience:n august
62 | author:n authority:n autumn:n average:n avoid:v
60 | aware baby:n back:v bad bag:n balance:n
58 | ball:n band:n bank:n bar:n base:v basic
56 | battle:n beach:n bear beat beautiful beauty:n
54 | bed:n bedroom:n beside besides beyond bill:n
52 | bird:n birth:n bit:n board:n boat:n
50 | bone:n border:n bottle:n bottom:n box:n
48 | branch:n brave:al bread bridge:n brief:l bright:al
46 | britain british broadcast:v brush:v budget:n
44 | burn:v bus:n busy button:n cake:n call:v
42 | card:n carry:v cast cat:n cause:v cell:n
40 | central century:n chain:n chair:n chairman challenge:v
38 | chance:n chapter:n character:n charge:v cheap:a check:v
36 | chest:n chief:n child choice:n choose christmas
34 | circle:n citizen:n civil claim:v clean:av
32 | climb:v clock:n club:n coal coast:n coat:n
30 | code:n coffee cold:a collect:v collection:n
29 | column:n combine:v comfort:n command:v comment:v
28 | committee:n company:n compare:v competition:n computer:n
27 | concept:n concern:v conclusion:n condition:n conference:n
26 | confidence confirm:v conflict:n congress connect:v
25 | consider:v constant:l construction:n contact:v contain:v
24 | content:n contest:n context:n continue:v contract:n
23 | contrast:n contribute:v conversation:n cook:v cool:a
22 | copy:v corner:n correct:l council:n count:v
21 | couple:n courage cover:v crack:v craft:n
20 | cream create:v credit:n crew:n crime:n
19 | critic:n crop:n cross:v crowd:n crown:n
18 | cry:v culture:n cup:n current:l curve:n
17 | custom:n customer:n cycle:n daily damage:v
16 | dance:v danger:n dark:a data date:n daughter:n
15 | dead deal dealt dear death:n debate:n
14 | debt:n decade:n december decide:v decision:n declare:v
13 | decline:v defense:n define:v degree:n deliver:v
12 | demand:v democracy depend:v describe:v
11 | design:v desire:v desk:n detail:n determine:v
"""

EXTRA3 = """
28 | develop:v device:n dictionary:n die:v diet:n
27 | difference:n difficult difficulty:n dinner:n direct:vl
26 | direction:n director:n discover:v discuss:v discussion:n
25 | disease:n distance:n district:n divide:v division:n
24 | document:n dollar:n domestic double:v doubt:v
23 | dozen:n draft:n drama:n dream:v dress:v
22 | drink drop:vD drug:n dry:av duty:n
21 | ear:n easy edge:n editor:n education
20 | effort:n egg:n either election:n
19 | electric element:n eleven else emerge:v emergency:n
18 | emotion:n emphasis employ:v empty enable:v
17 | encourage:v enemy:n energy:n engage:v engine:n
16 | engineer:n enjoy:v enter:v entire:l environment:n
15 | equal:l equipment era:n error:n escape:v
14 | essay:n establish:v estate:n estimate:v evening:n
13 | event:n eventually everybody everyone everything evidence
12 | exact:l examine:v excellent except exchange:v
11 | excite:v exercise:v exist:v expand:v expect:v
10 | expense:n experience:v experiment:n expert:n explain:v
9  | explore:v express:v extend:v extent extra
8  | fail:v faith fame familiar famous
28 | fan:n farm:n farmer:n fashion:n fast:a
27 | father:n fault:n favor:v favorite fear:v
26 | feature:n february federal fee:n feed
25 | feel feeling:n fellow:n female:n fence:n
24 | festival:n fiction fifteen fifth fifty
23 | file:n fill:v film:n final:l finance:n
22 | find fine:a finger:n finish:v fire:v
21 | firm:n fish:n fit:vD fix:v flag:n
20 | flat:aD flight:n floor:n flow:v flower:n
19 | focus:v folk:n foot football forward
18 | foreign forest:n formal:l former fortune:n
17 | forty foundation:n fourth frame:n france
16 | freedom french frequent:l fresh:a fruit:n
15 | fuel:n fun function:v fund:n future:n
14 | gain:v garden:n gas:n gate:n gather:v
13 | gender:n gene:n generation:n gentle gift:n
12 | glad glance:v glass:n global goal:n
11 | gold golden golf governor:n grade:n
10 | grand:a grant:v grass:n gray grateful
9  | grave:n greet:v grey guard:v guess:v
8  | guest:n guide:v gun:n guy:n habit:n
28 | hair:n hall:n handle:v happen:v
27 | happy harbor:n harm:n hat:n hate:v
26 | healthy heart:n heat:v heavy height:n
25 | hell hello helpful hero:n hide
24 | hill:n hire:v historic hit hole:n
23 | holiday:n holy honest:l honor:v hope:v
22 | horse:n hospital:n host:n hot:aD hotel:n
21 | huge:l humor hunt:v hurry:v hurt
20 | husband:n ice identify:v identity:n
19 | ignore:v ill illegal image:n imagine:v
18 | impact:n implement:v imply:v importance impose:v
17 | impossible impression:n improve:v incident:n include:v
16 | income:n indeed independence independent index:n
15 | indicate:v individual:n industrial industry:n infant:n
14 | influence:v inform:v initial:l injury:n inner
13 | inquiry:n inside insist:v instance:n instead
12 | institute:n institution:n instruction:n instrument:n insurance
11 | intend:v intense interview:v introduce:v invest:v
10 | investigate:v invite:v involve:v iron:n island:n
9  | issue:v item:n itself january japan
8  | job:n join:v joint:n joke:v journal:n
7  | journey:n joy judge:v juice:n july
28 | june junior jury:n justice keen
27 | key:n kick:v kid:n kill:v kitchen:n
26 | knee:n knife knock:v knowledge lab:n
25 | labor lack:v lady:n lake:n language:n
24 | laugh:v launch:v lawyer:n layer:n
23 | leader:n leaf league:n lean:v leap:v
22 | legal:l lemon:n length:n lesson:n library:n
21 | license:n lift:v limit:v link:v lip:n
20 | list:n literature lock:v log:n loss:n
19 | loud:al love:v lovely luck lucky
18 | lunch:n machine:n mad magazine:n mail:n
17 | main:l maintain:v majority:n male:n manage:v
16 | manager:n manner:n map:n march margin:n
15 | mark:v marriage:n marry:v mass:n master:n
14 | match:v mate:n maximum maybe mayor:n
13 | meal:n measure:v meat medal:n media
12 | medical medicine:n meeting:n melt:v memory:n
11 | mental:l mention:v menu:n mere:l message:n
10 | metal:n method:n middle midnight mile:n
9  | military milk mill:n minimum minister:n
8  | minor minute:n mirror:n miss:v mission:n
7  | mistake:n mix:v mixture:n mobile mode:n
28 | model:n modern monday monitor:v
27 | moon:n moral:l mother:n motion:n motor:n
26 | mountain:n mouse mouth:n movement:n movie:n
25 | multiple murder:v muscle:n museum:n mutual
24 | mystery:n nail:n narrow:a nation:n native
23 | natural:l navy:n near:a nearby necessary
22 | neck:n negative neighbor:n neither nerve:n
21 | net:n network:n news newspaper:n nice:a
20 | nobody nod:vD noise:n none noon
19 | normal:l nose:n note:v notice:v notion:n
18 | novel:n november nowhere nuclear nurse:n
17 | object:n objective:n obligation:n observe:v obtain:v
16 | obvious:l occasion:n occur:vD ocean:n october
15 | odd offer:v officer:n official:n often
14 | oil:n okay onto opening:n operate:v
13 | operation:n opinion:n opportunity:n oppose:v option:n
12 | orange:n organization:n organize:v origin:n original:l
11 | otherwise ought ourselves outcome:n output:n
10 | outside oven:n overall owe:v owner:n
9  | pace:n pack:v package:n page:n pain:n
8  | paint:v pair:n palace:n pale panel:n
7  | panic:n parent:n park:n parliament:n partner:n
28 | pass:v passage:n passenger:n past path:n
27 | patient:n pattern:n pause:v peace peak:n
26 | pen:n penalty:n pension:n perfect:l
25 | perform:v performance:n perhaps permanent:l permit:vD
24 | personal:l phase:n phone:n photo phrase:n
23 | physical:l piano pick:v picture:n pilot:n
22 | pink pipe:n pitch:n plain:l plane:n
21 | planet:n plant:v plastic plate:n platform:n
20 | player:n pleasant please pleasure plenty
19 | plot:n pocket:n poem:n poet:n poetry
18 | police policy:n polite:l political:l politics
17 | pool:n poor:a popular population:n port:n
16 | pose:v position:n positive possess:v possible
15 | post:v pot:n potential:l pound:n pour:v
14 | powder:n practical:l practice:v praise:v predict:v
13 | prefer:vD pregnant preparation:n prepare:v presence
12 | press:v pressure:n pretty prevent:v previous:l
11 | price:n pride priest:n primary prime
10 | principle:n print:v prior priority:n prison:n
9  | private:l prize:n probably procedure:n produce:v
8  | product:n production:n profession:n professor:n profile:n
7  | profit:n progress:n project:n promise:v promote:v
28 | prompt:l proof:n proper:l property:n proposal:n
27 | propose:v prospect:n protect:v protest:v proud:l
26 | prove:v pull:v pump:v punch:v pupil:n
25 | purchase:v pure:l purpose:n pursue:v push:v
24 | qualify:v quality:n quantity:n quarter:n queen:n
23 | quiet:al quit quote:v race:v radio
22 | rail:n rain:v raise:v range:n rank:v
21 | rapid:l rare:l rat:n rating:n raw
20 | reach:v react:v reader:n reading:n ready
19 | reality:n realize:v rear reasonable recall:v
18 | recent:l recipe:n recognize:v recommend:v recover:v
17 | reduce:v refer:vD reflect:v reform:v refuse:v
16 | regard:v region:n register:v regret:vD regular:l
15 | reject:v relate:v relation:n relationship:n relative:l
14 | release:v relevant relief religion:n religious
13 | rely:v remain:v remark:v remember:v remind:v
12 | remote remove:v rent:v repair:v repeat:v
11 | replace:v reply:v represent:v request:v require:v
10 | rescue:v research:n resident:n resist:v resolve:v
9  | resource:n respect:v respond:v response:n rest:v
8  | restaurant:n retain:v retire:v reveal:v revenue:n
7  | review:v reward:v rhythm:n rice rich:a
28 | rid ring:n risk:v ritual:n rival:n
27 | river:n rock:n role:n roll:v roof:n
26 | root:n rope:n rough:al round:a route:n
25 | row:n royal rub:vD rule:v rural
24 | rush:v sad safe:al safety sail:v
23 | salary:n sale:n salt sample:n sand
22 | satisfy:v sauce:n save:v scale:n scene:n
21 | schedule:n scheme:n science:n scientist:n score:v
20 | scream:v screen:n script:n sea:n search:v
19 | seat:n secret:nl section:n sector:n secure:l
18 | security seed:n select:v selection:n senate
17 | senator:n senior sentence:n separate:vl september
16 | sequence:n serious:l serve:v session:n settle:v
15 | severe:l shade:n shadow:n shall
14 | shape:v share:v sharp:al sheet:n shelf
13 | shell:n shelter:n shift:v shirt:n
12 | shock:v shoe:n shop:nD shore:n
11 | shoulder:n shout:v sick sight:n
10 | sign:v signal:n significant silence silent:l
9  | silver similar:l simply sin:n sincere:l
8  | sister:n site:n sixty ski skill:n
7  | skin:n sky:n slave:n slight:l
28 | slip:vD slow:avl smart:a smell:v smile:v
27 | smoke:v smooth:al snake:n snow:n soft:al
26 | soil:n soldier:n solid solution:n solve:v
25 | somebody somehow someone sometimes
24 | somewhat somewhere son:n song:n soon
23 | sorry sort:n soul:n sound:v soup:n
22 | source:n speaker:n speech:n speed:n spell:v
21 | spirit:n sport:n spot:n
20 | square:n stable staff:n stair:n stamp:n
19 | standard:n star:n stare:v station:n
18 | statue:n status stay:v steady steal
17 | steel steep step:nD stiff
16 | stir:vD stomach stone:n store:v storm:n
15 | straight strange:l stranger:n strategy:n stream:n
14 | stress:v stretch:v strict:l strike string:n
13 | strip:nD stroke:n structure:n struggle:v studio
12 | stuff:n stupid style:n subject:n substance:n
11 | succeed:v success successful sudden:l suffer:v
10 | sugar suggest:v suit:v sum:nD sun:n
9  | sunday supply:v sure surface:n surgery:n
8  | surprise:v surround:v survey:n survive:v suspect:v
7  | sweet:a swim swing switch:v
28 | symbol:n sympathy tail:n talent:n
27 | talk:v tall:a tank:n tape:n target:n
26 | task:n taste:v tax:n tea teacher:n
25 | team:n tear telephone:n television:n tell
24 | temperature:n temple:n tend:v tension:n term:n
23 | test:v text:n thank:v theme:n theory:n
22 | therefore thick:a thin:aD third thirty
21 | threat:n threaten:v throat:n tie:v tight:al
20 | till timber tiny tip:nD tired
19 | title:n tomorrow ton:n tone:n tongue:n
18 | tonight tool:n tooth top:n topic:n
17 | total:l touch:v tough:a tour:n tourist:n
16 | towards tower:n track:v tradition:n traffic
15 | train:v transfer:vD transform:v transition:n translate:v
14 | transport:v travel:v treat:v treatment:n tree:n
13 | trend:n trial:n trick:n trip:nD troop:n
12 | trouble:n truck:n true truly trust:v
11 | truth:n try:v tube:n tuesday tune:n
10 | tunnel:n twelve twenty twice twin:n
9  | type:n typical:l uncle:n underlying understanding
8  | unfortunately uniform:n union:n unique unit:n
7  | universe:n university:n unless unlikely
28 | unusual:l upper urban urge:v usual:l
27 | valley:n valuable variety:n vary:v vast:l
26 | vegetable:n vehicle:n venture:n version:n vessel:n
25 | veteran:n via victim:n victory:n video
24 | village:n violence violent:l virtue:n visible
23 | vision:n visit:v visitor:n vital voice:n
22 | volume:n vote:v wage:n wait:v wake
21 | wall:n wander:v warm:a warn:v wash:v
20 | waste:v wave:v weak:a wealth weapon:n
19 | weather web:n wedding:n wednesday week:n
18 | weekend:n weigh:v weight:n welcome:v welfare
17 | wet:aD wheel:n whenever whereas wherever
16 | whether whisper:v wide:al wild:al willing
15 | wing:n winner:n wise:al wish:v witness:n
14 | wonder:v wonderful wood:n wooden wool
13 | worker:n workshop:n worry:v worth wound:n
12 | wrap:vD wrist:n writer:n wrong:l yard:n
11 | yeah yellow yesterday yield:v youth:n
10 | zone:n
"""

# Rare but real words kept for full alphabet coverage and trie depth.
EXTRA_RARE = """
6 | absence absolute:l abstract academic accent:n accident:n
6 | accompany:v accomplish:v accuse:v ache:n acid:n
5 | acre:n actor:n actress:n adapt:v addition:n adequate
5 | adjust:v admire:v admit:vD adopt:v adult:n
5 | ballot:n bamboo bargain:n barrel:n basket:n bath:n
5 | bay:n bean:n beam:n beard:n beast:n bell:n
4 | belt:n bench:n berry:n bet:vD bias:n
4 | bicycle:n biology bishop:n bitter:l
4 | blade:n blame:v blank blanket:n blast:n blend:v
4 | bless:v blind block:v blood bloom:v
4 | bold:al bolt:n bomb:n bond:n bonus:n boot:n
4 | bound boundary:n bow:v bowl:n brain:n brand:n
4 | brass breath:n breathe:v breeze:n brick:n
4 | bride:n brilliant broom:n bubble:n bucket:n buddy:n
4 | bug:n bulk bull:n bullet:n bunch:n burden:n
4 | bury:v bush:n butter buzz:v
4 | cabin:n cabinet:n cable:n cage:n calendar:n calm:al
3 | canal:n cancel:v cancer candidate:n candle:n candy:n
3 | canvas cap:n capacity:n cape:n carbon cargo
3 | carpet:n carriage:n cart:n carve:v castle:n casual:l
3 | cattle caution:n cave:n cease:v ceiling:n celebrate:v
3 | cement cemetery:n cereal:n ceremony:n chalk chamber:n
3 | champion:n channel:n chaos charm:n chart:n chase:v
3 | cheek:n cheer:v cheese chemical:n chemistry cherry:n
3 | chicken:n chill:n chimney:n chin:n chip:n chocolate
3 | chop:vD chorus:n cigarette:n cinema circuit:n circumstance:n
3 | cite:v civilian:n clash:n clause:n clay clerk:n
3 | clever click:v client:n cliff:n climate:n
3 | clinic:n clip:nD cloth:n clothes cloud:n clue:n
3 | cluster:n coach:n coin:n collapse:v colleague:n colony:n
3 | comb:n combat:n comedy:n comfortable comic
3 | commerce commission:n commit:vD commodity:n communicate:v companion:n
3 | compete:v complain:v complex compose:v compound:n comprehensive
3 | compromise:n conceal:v concentrate:v concrete condemn:v conduct:v
3 | cone:n confess:v confine:v confuse:v congratulate:v conquer:v
3 | conscience conscious:l consent:n consequence:n conservative consist:v
3 | console:v conspiracy:n constitution:n consult:v consume:v contemporary
3 | contempt contend:v continent:n convention:n convert:v convince:v
3 | cope:v copper cord:n core:n corn corporate
3 | corridor:n cottage:n cotton couch:n cough:v counsel:n
3 | counter:n county:n courtesy cousin:n crab:n crash:v
3 | crawl:v crazy creature:n crest:n cricket:n
3 | crisis criterion critical:l criticism crucial crude
3 | cruel cruise:n crush:v crystal:n cube:n cue:n
3 | cultural:l cunning cupboard:n cure:v curious:l curl:v
3 | currency:n curtain:n cushion:n customs cute
2 | dairy dam:n damp dare:v dash:v dawn:n
2 | deaf dealer:n dean:n decent decay:v deck:n
2 | decorate:v decrease:v dedicate:v deed:n deer defeat:v
2 | defend:v deficit:n delay:v delegate:n delete:v deliberate:l
2 | delicate delight:n demon:n demonstrate:v dense:l
2 | dentist:n deny:v depart:v deposit:n depress:v depth:n
2 | deputy:n derive:v descend:v desert:n deserve:v designer:n
2 | despair desperate:l despite dessert:n destination:n destroy:v
2 | destruction detect:v devil:n devote:v diagram:n
2 | dial:v dialogue:n diamond:n diary:n dice
2 | digital dignity dim:aD dine:v dip:vD diplomat:n
2 | dirt dirty disagree:v disappear:v disaster:n discipline:n
2 | discount:n discourse:n dish:n disk:n dismiss:v disorder:n
2 | display:v dispute:n dissolve:v distant distinct:l distinguish:v
2 | distribute:v disturb:v dive:v diverse divine:l dock:n
2 | dogma doll:n dome:n dominant dominate:v donate:v
2 | donkey:n doorway:n dose:n dot:nD dough downtown
2 | drag:vD drain:v dramatic drawer:n dread:v drift:v
2 | drill:v drip:vD drum:nD drunk dull dumb
2 | dump:v dust durable dusk dwell:v dye:n
2 | eager:l eagle:n earn:v earnest earthquake:n ease:v
2 | echo:n eclipse:n ecology edit:v educate:v eel:n
2 | effective:l efficiency efficient:l elbow:n elder elect:v
2 | elegant elephant:n elevator:n elite embrace:v
2 | emperor:n empire:n enact:v encounter:v endless:l endure:v
2 | enforce:v engineering enormous:l enrich:v enroll:v ensure:v
2 | enterprise:n entertain:v enthusiasm entity:n entrance:n entry:n
2 | envelope:n envy equation:n equivalent erect:v erosion
2 | essence essential:l ethics ethnic evaluate:v evident:l
2 | evil evolve:v exceed:v exception:n excess excuse:v
2 | execute:v executive:n exhaust:v exhibit:v exile:n exit:n
2 | exotic expansion:n expedition:n explicit:l explode:v
2 | exploit:v explosion:n export:v expose:v exposure:n
2 | external:l extreme:l fabric:n facility:n factor:n factory:n
2 | faculty:n fade:v failure:n faint:l fair:al fairy:n
2 | fake fantasy:n fare:n farewell
2 | fatal:l fate fatigue feast:n feather:n
2 | ferry:n fertile fever:n fiber:n fierce:l filter:v
2 | fin:n finding:n firmly fiscal fist:n flame:n
2 | flash:v flavor:n fleet:n flesh flexible
2 | float:v flock:n flood:v flour flourish:v fluid:n
2 | flush:v foam fog fold:v folly
2 | forecast:v forehead:n forever forge:v formula:n fort:n
2 | forth fossil:n foster:v fountain:n fragile fraction:n
2 | fragment:n frank:l fraud freight frequency:n
2 | frog:n frontier:n frost frown:v fry:v
2 | fulfill:v fundamental:l funeral:n fur furniture fury
2 | fuse:n fuss gallery:n gallon:n gamble:v gang:n
2 | gap:n garage:n garbage garlic garment:n gaze:v
2 | gear:n gem:n generous:l genius:n gentleman genuine:l
2 | geography geometry germ:n gesture:n ghost:n giant:n
2 | ginger giggle:v glacier:n glare:v gleam:v glide:v
2 | glimpse:n glitter:v gloom glory glove:n glow:v
2 | glue goat:n goodness gossip:n gown:n grab:vD
2 | grace graceful gradual:l grain:n grammar grape:n
2 | graph:n grasp:v gratitude gravel gravity graze:v
2 | grease greed grief grim grin:vD
2 | grip:vD groan:v grocery:n groom:n groove:n gross
2 | guarantee:v guilt guilty gulf:n gum:n gut:n
2 | habitat:n hail:v hairy halt:v hammer:n handful:n
2 | handsome handy harden:v hardship:n hardware harmony
2 | harsh:l harvest:v haste hasty hatch:v haul:v
2 | haven:n hawk:n hay hazard:n headline:n heal:v
2 | heap:n heaven:n hedge:n heel:n heir:n helicopter:n
2 | helmet:n hemisphere:n hence herb:n herd:n heritage
2 | hesitate:v hidden highway:n hint:n hip:n historian:n
2 | hollow homeland:n honey hook:n hopeful:l horizon:n
2 | horn:n horror:n hose:n hostage:n hostile household:n
2 | hug:vD humble humid hunger hurricane:n hut:n
2 | hymn:n hypothesis ideal:l identical ideology:n idiom:n
2 | idle idol:n immense:l immigrant:n immune imperial
2 | import:v impress:v imprison:v impulse:n incentive:n inch:n
2 | incline:v incorporate:v indoor induce:v indulge:v inevitable
2 | infect:v infer:vD inflation inherit:v initiative:n inject:v
2 | injure:v ink inland innocence innocent:l innovation:n
2 | insect:n insert:v insight:n inspect:v inspire:v install:v
2 | instant:l instinct:n integrate:v integrity intellect intelligence
2 | intent:n interact:v interfere:v interior:n internal:l interpret:v
2 | interrupt:v interval:n intimate invade:v invent:v invention:n
2 | inventory:n invisible invoke:v irony irrigation
2 | isolate:v ivory jacket:n jail:n jam:nD jar:n
2 | jaw:n jazz jealous jeans jet:n jewel:n
2 | jingle:v jog:vD jolly journalist:n judgment:n jug:n
2 | jumble:v junction:n jungle:n junk jurisdiction justify:v
2 | keeper:n kernel:n kettle:n keyboard:n kidney:n kin
2 | kingdom:n kiss:v kit:n kite:n kitten:n knight:n
2 | knit:vD knob:n knot:nD lace:n ladder:n lag:vD
2 | lamb:n lame lamp:n lane:n lantern:n lap:nD
2 | lapse:n laser:n latitude latter laughter laundry
2 | lava lawn:n leak:v leather lecture:n
2 | legacy:n legend:n legislation legitimate leisure lens:n
2 | leopard:n lever:n liable liberal liberty:n librarian:n
2 | lid:n likewise limb:n lime:n linen linger:v
2 | liquid:n liter:n literacy literal:l litter:n lively
2 | liver:n lizard:n load:v loaf loan:n lobby:n
2 | lobster:n locate:v lodge:n lofty logic:n lonely
2 | loop:n loose:l lord:n lorry:n loyal:l luggage
2 | lumber luminous lump:n lunar lung:n luxury
2 | lyric:n machinery magic magnet:n magnificent magnitude
2 | maid:n mainland mammal:n mandate:n mansion:n manual:l
2 | manufacture:v manuscript:n marble marine maritime marsh:n
2 | marvel:v mask:n mat:n mature:l meadow:n meantime
2 | meanwhile mechanic:n mechanism:n melody:n membrane:n
2 | memo:n merchant:n mercy merely merge:v merit:n
2 | merry mess:n messenger:n microphone:n microscope:n midst
2 | mighty migrate:v mild:l milestone:n mineral:n mingle:v
2 | miniature minimal misery missile:n mist:n mock:v
2 | modest:l modify:v moist molecule:n momentum monarch
2 | monk:n monkey:n monopoly:n monster:n monument:n mood:n
2 | mortal mortgage:n mosaic:n mosque:n moss motive:n
2 | mould:n mount:v mourn:v mud mug:n mule:n
2 | multiply:v municipal murmur:v mushroom:n musician:n mustard
2 | mute mutter:v mystic myth:n naked napkin:n
2 | nasty naval navigate:v neat:l needle:n neglect:v
2 | negotiate:v nephew:n nest:n neutral nickel:n niece:n
2 | nightmare:n noble nominate:v nonsense norm:n nostalgia
2 | notable:l notebook:n nought nourish:v novelty:n nowadays
2 | nucleus nuisance numerous nun:n nut:n nylon
2 | oak:n oath:n obey:v oblige:v obscure:l obsess:v
2 | obstacle:n occupation:n occupy:v odor:n offend:v offense:n
2 | offshore offspring omit:vD onion:n onset opera:n
2 | opponent:n oppress:v optical optimism oracle:n oral:l
2 | orbit:n orchard:n orchestra:n ordinary ore:n organ:n
2 | organic orient:v ornament:n orphan:n outbreak:n outdoor
2 | outer outfit:n outlet:n outline:n outlook:n outrage:n
2 | outstanding oval overhead overlook:v overnight
2 | overseas overturn:v overwhelm:v owl:n ox
2 | oxygen oyster:n pad:nD paddle:v pagan pageant:n
2 | pal:n palm:n pan:n pancake:n pane:n parade:n
2 | paradise paradox:n paragraph:n parallel parcel:n pardon:n
2 | parish:n parlor:n parrot:n parsley participate:v particle:n
2 | passion:n passive:l passport:n pasta paste:n pasture:n
2 | pat:vD patch:n patent:n patrol:n patron:n pave:v
2 | paw:n payment:n pea:n pearl:n peasant:n pebble:n
2 | peculiar:l pedal:n peer:n peg:n pellet:n
2 | pelt:n penetrate:v penguin:n peninsula:n penny:n
2 | pepper perceive:v percent perception:n perch:v peril:n
2 | perimeter:n periodic perish:v permission persist:v personnel
2 | persuade:v pest:n petal:n petition:n petrol petty
2 | philosopher:n philosophy phenomenon physician:n physics pie:n
2 | pier:n pierce:v pig:n pigeon:n pile:n pill:n
2 | pillar:n pillow:n pin:nD pinch:v pine:n pint:n
2 | pioneer:n pious pirate:n pistol:n piston:n pit:n
2 | pity pivot:n pixel:n pizza:n plague:n planner:n
2 | plaster plateau:n plausible plea:n plead:v pledge:n
2 | plight plough:n pluck:v plug:nD plum:n plumber:n
2 | plunge:v plural:n plus pneumonia poke:v polar
2 | pole:n polish:v poll:n pollen pollution pond:n
2 | ponder:v pony:n pope:n poppy:n porch:n pore:n
2 | pork porridge portable portion:n portrait:n portray:v
2 | possession:n postage postpone:v posture:n potato:n pottery
2 | poultry poverty pray:v prayer:n
2 | preach:v precede:v precious precise:l predecessor:n preference:n
2 | prejudice:n preliminary premise:n premium:n prescribe:v preserve:v
2 | prestige presume:v pretend:v prevail:v prey priceless
2 | primitive prince:n princess:n principal:l privilege:n probe:v
2 | proceed:v proclaim:v profound:l prohibit:v projection:n prolong:v
2 | prominent:l prone pronounce:v propaganda propel:vD prophet:n
2 | proportion:n prosecute:v prosper:v protein:n protocol:n prototype:n
2 | province:n provoke:v proximity prudent:l psychology pub:n
2 | puddle:n puff:v pulse:n punish:v purple
2 | purse:n pursuit:n puzzle:v pyramid:n quaint qualm:n
2 | quantum quarrel:v quart:n quartz quench:v query:n
2 | quest:n questionnaire:n queue:n quilt:n quirk:n quiz
2 | quota:n rabbit:n rack:n radar radiant radical
2 | radius raft:n rage:n raid:n rally:v ramp:n
2 | ranch:n random:l rash rattle:v ray:n
2 | razor:n realm:n reap:v reckless reckon:v recruit:v
2 | rectangle:n recur:vD recycle:v reed:n reef:n reel:v
2 | refine:v refrain:v refresh:v refuge refugee:n refund:n
2 | regime:n regiment:n rehearse:v reign:v rein:n reinforce:v
2 | relax:v relay:v relic:n relieve:v reluctant:l remedy:n
2 | remnant:n remorse render:v renew:v renown rental
2 | repertoire:n repetition:n reproduce:v reptile:n republic:n reputation:n
2 | resemble:v resent:v reserve:v reservoir:n reside:v residue:n
2 | resign:v resin resort:n restore:v restrain:v restrict:v
2 | resume:v retail retreat:v retrieve:v reunion:n revenge
2 | reverse:v revive:v revolt:v revolution:n revolve:v rhyme:n
2 | rib:n ribbon:n riddle:n ridge:n ridicule:v rifle:n
2 | rig:vD rim:n riot:n rip:vD ripe ripple:n
2 | rite:n roam:v roar:v roast:v rob:vD
2 | robe:n robin:n robot:n robust rod:n rodent:n
2 | rogue:n romance:n romantic roost:v rooster:n rot:vD
2 | rotate:v rotten rouse:v routine:n rover:n rubber
2 | rubbish ruby:n rug:n ruin:v rumble:v rumor:n
2 | rust rustic rut:n sack:n sacred sacrifice:v
2 | saddle:n saga:n sage:n saint:n sake salad:n
2 | salmon salon:n salute:v salvage:v sanction:n sanctuary:n
2 | sane sap:n sarcasm satellite:n satire:n saturate:v
2 | sausage:n savage scan:vD scandal:n scar:nD scarce:l
2 | scare:v scarf scatter:v scenario:n scent:n scholar:n
2 | scoop:v scope scorn:n scout:n scrap:nD scrape:v
2 | scratch:v scroll:n scrub:vD sculptor:n sculpture:n seal:v
2 | seam:n sermon:n servant:n settlement:n sever:v shabby
2 | shaft:n shallow sham:n shampoo:n shark:n shatter:v
2 | shave:v shawl:n shear:v shed:n sheep sheer
2 | shepherd:n shield:n shimmer:v shiver:v shrub:n
2 | shrug:vD shuffle:v shuttle:n shy sibling:n siege:n
2 | sieve:n sift:v sigh:v silk silly simmer:v
2 | simulate:v simultaneous:l sinister sip:vD siren:n skeleton:n
2 | sketch:v skim:vD skip:vD skirt:n skull:n slab:n
2 | slack slam:vD slang slant:v slap:vD slate:n
2 | slaughter:v sledge:n sleek sleeve:n slender slice:v
2 | slick slim:aD sling:n slit:n slogan:n slope:n
2 | slot:n sluggish slump:v smash:v smear:v smug
2 | smuggle:v snack:n snail:n snap:vD snatch:v sneak:v
2 | sniff:v snore:v snug soak:v soap sober:l
2 | soccer sock:n socket:n sofa:n solar sole:l
2 | solemn:l solo somber sonnet:n soothe:v sophisticated
2 | sore sour:l sovereign:n spacious span:nD spare:v
2 | spark:v sparkle:v sparrow:n spatial:l spawn:v spear:n
2 | species specify:v specimen:n spectacle:n spectrum:n speculate:v
2 | sphere:n spice:n spider:n spike:n spill:v spine:n
2 | spiral:n spite splash:v splendid splinter:n sponge:n
2 | sponsor:v spoon:n spouse:n sprawl:v spray:v sprinkle:v
2 | sprint:v sprout:v spur:nD spy:n squad:n squeeze:v
2 | squirrel:n stab:vD stack:n stadium:n stagger:v stain:v
2 | stake:n stale stalk:v stall:n stance:n staple:n
2 | starve:v stationary statistics statute:n steak:n steam:n
2 | steer:v stem:nD stern sticky stimulus stitch:n
2 | stoop:v storage stout stove:n straddle:v strain:v
2 | strand:n strap:nD straw:n streak:n strengthen:v strife
2 | strive:v stroll:v stubborn stud:n stumble:v stump:n
2 | stun:vD sturdy subdue:v sublime submit:vD subscribe:v
2 | subsequent:l subsidy:n substitute:v subtle suburb:n subway:n
2 | suck:v sue:v suffice:v sulfur sullen summit:n
2 | summon:v superb superior supreme surge:v surplus:n
2 | surrender:v suspend:v sustain:v swallow:v swamp:n swan:n
2 | swap:vD swarm:n sway:v sweat:v swell:v swift:l
2 | swirl:v sword:n syllable:n symptom:n syndrome:n synthesis
2 | syrup tablet:n taboo tack:n tackle:v tactic:n
2 | tag:nD tailor:n taint:v tame tangle:v tap:vD
2 | tar tariff:n tart:n tavern:n tedious teenager:n
2 | temper:n tempest:n tempo:n tempt:v tenant:n tender
2 | tennis tenor:n tent:n tenure:n terminal:n terrace:n
2 | terrain:n terrible territory:n terror testify:v testimony:n
2 | texture:n thaw:v theater:n thereby thermal thesis
2 | thief thigh:n thorn:n thorough:l thread:n thrill:v
2 | thrive:v throne:n throng:n thumb:n thunder:n tick:v
2 | ticket:n tide:n tidy tiger:n tilt:v timid:l
2 | tin:n tissue:n toad:n toast:v tobacco toe:n
2 | toil:v token:n tolerate:v toll:n tomato:n tomb:n
2 | torch:n torment:v torrent:n torso:n tortoise:n torture:v
2 | toss:v tow:v trace:v tractor:n trait:n traitor:n
2 | tramp:n trample:v tranquil transaction:n transcribe:v transit
2 | transmit:vD transparent trap:nD trash tray:n treason
2 | treasure:n treaty:n tremble:v tremendous:l trench:n trespass:v
2 | tribe:n tribute:n trifle:n trigger:v trim:vD trio:n
2 | triumph:n trivial trolley:n trophy:n tropical trot:vD
2 | trout trunk:n tug:vD tuition tulip:n tumble:v
2 | tumor:n turbine:n turf turmoil turnip:n turtle:n
2 | tutor:n tweed twig:n twilight twist:v tyrant:n
2 | ugly ultimate:l umbrella:n unanimous:l uncover:v
2 | undermine:v underneath unease uneasy
2 | unfold:v unify:v unite:v unity universal:l unjust
2 | unravel:v unrest unveil:v upcoming upgrade:v
2 | uplift:v upright uproar upstairs upward
2 | urgent:l usage utility:n utmost utter:vl vacant
2 | vacation:n vaccine:n vacuum:n vague:l vain valid
2 | validate:v vanish:v vanity vapor variable:n varnish:n
2 | vault:n veal veer:v vein:n velvet vendor:n
2 | vent:n verb:n verdict:n verge:n verify:v verse:n
2 | vertical:l vest:n vex:v vibrant vibrate:v
2 | vice:n vicinity vicious:l vigil:n vigor
2 | vile villa:n vine:n vinegar vintage:n vinyl
2 | viola:n violate:v violet:n violin:n viral virus:n
2 | visa:n viscous visual:l vivid:l vocal:l vogue
2 | void volcano volley:n volt:n voluntary volunteer:n
2 | vomit:v vowel:n voyage:n vulgar vulnerable vulture:n
2 | wad:n wade:v wag:vD wagon:n waist:n waiter:n
2 | waive:v walnut:n waltz:n wand:n ward:n wardrobe:n
2 | ware:n warehouse:n warfare warrant:n warrior:n wart:n
2 | wary wasp:n watchful weary weave:v wedge:n
2 | weed:n weird weld:v whale:n wharf
2 | wheat whereby whim:n whine:v whip:nD
2 | whirl:v whisk:v whistle:v wicked widow:n width:n
2 | wield:v wig:n wilderness willow:n wilt:v wince:v
2 | winch:n wink:v wipe:v wire:n wisdom wit:n
2 | witch:n wither:v wizard:n wolf
2 | womb:n woo:v worm:n worship:v worthy wrath
2 | wreath:n wreck:v wrench:n wrestle:v wretched
2 | wrinkle:n xenon xerox:n xylophone:n yacht:n yarn:n
2 | yawn:v yearn:v yeast yell:v yelp:v yoga
2 | yogurt yoke:n yolk:n yonder zeal zebra:n
2 | zenith zest zigzag:n zinc zip:vD zipper:n
2 | zodiac:n zoom:v zoo
"""

# Words needed so the bigram passages stay mostly in-vocabulary, plus a
# few explicit plural and coverage entries.
SUPPORT = """
6 | live:v publish:v economy:n activity:n particular:l publicly
3 | daisy:n peep:v endow:v impel entitle:v acknowledge:v
3 | conceive:v proposition:n altogether plod:vD mankind separation:n
3 | creator:n happiness epoch belief:n darkness worst
3 | hare:n boast:v dart:v nap:n morsel:n thirst
3 | ripen:v watery circulation coffin:n regulate:v sleepy
3 | self rightful calf goose photos videos
3 | radios pianos studios zoos oxen criteria
"""

IRREGULAR_PLURALS = """
120 | children
40 | teeth
30 | mice geese
20 | wives knives lives leaves halves wolves
15 | shelves loaves thieves selves calves
"""


def parse_lexicon(block: str) -> list[tuple[str, float, str]]:
    entries = []
    for raw in block.strip().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        pm_str, _, rest = line.partition("|")
        pm = float(pm_str.strip())
        for i, tok in enumerate(rest.split()):
            word, _, flags = tok.partition(":")
            word = word.lower()
            if not (word.isascii() and word.isalpha()):
                continue
            entries.append((word, pm * (0.99 ** i), flags))
    return entries


def build_unigrams() -> dict[str, int]:
    rates: dict[str, float] = {}

    def put(form: str, pm: float) -> None:
        # keep the larger rate when a form is produced twice
        if pm > rates.get(form, 0.0):
            rates[form] = pm

    blocks = [LEXICON, EXTRA, EXTRA2, EXTRA3, EXTRA_RARE, SUPPORT,
              IRREGULAR_PLURALS]
    for block in blocks:
        for word, pm, flags in parse_lexicon(block):
            for form, form_pm in expand(word, pm, flags):
                put(form, form_pm)
    for form, form_pm in parse_irregulars(IRREGULAR_VERBS):
        put(form, form_pm)
    return {w: max(1, round(r * TOKENS_PER_MILLION)) for w, r in rates.items()}


# ---------------------------------------------------------------------------
# Bigram source text: short passages of classic public-domain prose.
# ---------------------------------------------------------------------------

PASSAGES = """
it is a truth universally acknowledged that a single man in possession of a
good fortune must be in want of a wife. however little known the feelings or
views of such a man may be on his first entering a neighbourhood this truth
is so well fixed in the minds of the surrounding families that he is
considered the rightful property of some one or other of their daughters.

it was the best of times it was the worst of times it was the age of wisdom
it was the age of foolishness it was the epoch of belief it was the epoch of
incredulity it was the season of light it was the season of darkness it was
the spring of hope it was the winter of despair we had everything before us
we had nothing before us we were all going direct to heaven we were all
going direct the other way.

four score and seven years ago our fathers brought forth on this continent a
new nation conceived in liberty and dedicated to the proposition that all
men are created equal. now we are engaged in a great civil war testing
whether that nation or any nation so conceived and so dedicated can long
endure. we are met on a great battle field of that war. we have come to
dedicate a portion of that field as a final resting place for those who here
gave their lives that that nation might live. it is altogether fitting and
proper that we should do this. but in a larger sense we can not dedicate we
can not consecrate we can not hallow this ground. the brave men living and
dead who struggled here have consecrated it far above our poor power to add
or detract. the world will little note nor long remember what we say here
but it can never forget what they did here. it is for us the living rather
to be dedicated here to the unfinished work which they who fought here have
thus far so nobly advanced.

alice was beginning to get very tired of sitting by her sister on the bank
and of having nothing to do. once or twice she had peeped into the book her
sister was reading but it had no pictures or conversations in it. and what
is the use of a book thought alice without pictures or conversations. so she
was considering in her own mind as well as she could for the hot day made
her feel very sleepy and stupid whether the pleasure of making a daisy chain
would be worth the trouble of getting up and picking the daisies when
suddenly a white rabbit with pink eyes ran close by her.

call me ishmael. some years ago never mind how long precisely having little
or no money in my purse and nothing particular to interest me on shore i
thought i would sail about a little and see the watery part of the world. it
is a way i have of driving off the spleen and regulating the circulation.
whenever i find myself growing grim about the mouth whenever it is a damp
drizzly november in my soul whenever i find myself involuntarily pausing
before coffin warehouses and bringing up the rear of every funeral i meet i
account it high time to get to sea as soon as i can.

one hot summer day a fox was walking through an orchard when he came to a
bunch of grapes just ripening on a vine which had been trained over a lofty
branch. just the thing to quench my thirst he said. drawing back a few paces
he took a run and a jump and just missed the bunch. turning round again he
went up and down trying to reach the tempting morsel but at last he had to
give it up and walked away with his nose in the air saying i am sure they
are sour.

the hare was once boasting of his speed before the other animals. i have
never yet been beaten he said when i put forth my full speed. i challenge
any one here to race with me. the tortoise said quietly i accept your
challenge. that is a good joke said the hare. i could dance round you all
the way. the hare darted almost out of sight at once but soon stopped and
to show his contempt for the tortoise lay down to have a nap. the tortoise
plodded on and plodded on and when the hare awoke from his nap he saw the
tortoise just near the winning post and could not run up in time to save the
race. then said the tortoise slow and steady wins the race.

in the beginning god created the heaven and the earth. and the earth was
without form and void and darkness was upon the face of the deep. and the
spirit of god moved upon the face of the waters. and god said let there be
light and there was light. and god saw the light that it was good and god
divided the light from the darkness.

when in the course of human events it becomes necessary for one people to
dissolve the political bands which have connected them with another and to
assume among the powers of the earth the separate and equal station to which
the laws of nature entitle them a decent respect to the opinions of mankind
requires that they should declare the causes which impel them to the
separation. we hold these truths to be self evident that all men are created
equal that they are endowed by their creator with certain unalienable rights
that among these are life liberty and the pursuit of happiness.
"""


def build_bigrams(vocab: set[str]) -> Counter:
    pairs: Counter = Counter()
    for sentence in re.split(r"[.!?;:]", PASSAGES.lower()):
        words = re.findall(r"[a-z]+", sentence)
        for prev, nxt in zip(words, words[1:]):
            if prev in vocab and nxt in vocab:
                pairs[(prev, nxt)] += 1
    return pairs


# ---------------------------------------------------------------------------
# Sanity checks: the bundled corpus must support the documented behaviors.
# ---------------------------------------------------------------------------

# Forms a bad inflection flag would generate.  None may ever appear.
FORBIDDEN = {
    "maked", "taked", "keeped", "knowed", "thinked", "sayed", "gived",
    "bringed", "leaved", "speaked", "runned", "standed", "holded", "payed",
    "catched", "teached", "buyed", "fighted", "seeked", "selled", "sleeped",
    "sweeped", "spended", "lended", "writed", "cutted", "falled", "rised",
    "growed", "drived", "rided", "singed", "ringed", "drawed", "throwed",
    "beginned", "meaned", "meeted", "heared", "losed", "leaded",
    "understanded", "sitted", "breaked", "choosed", "weared", "eated",
    "flied", "forgetted", "telled", "becomed", "feeled", "winned", "sended",
    "shaked", "shooted", "stealed", "sticked", "teared", "waked", "finded",
    "feeded", "builded", "bended", "binded", "bited", "blowed", "breeded",
    "bursted", "casted", "clinged", "digged", "fleed", "forbidded",
    "freezed", "grinded", "hided", "hitted", "hurted", "quitted",
    "shrinked", "shutted", "slided", "spinned", "splitted", "spreaded",
    "stinged", "strided", "striked", "swimmed", "swinged", "sweared",
    "thrusted", "undergoed", "undertaked", "undoed", "upholded", "upsetted",
    "weeped", "wringed", "withdrawed", "withstanded", "overcomed",
    "overtaked", "arised", "beated", "beared", "dealed", "drinked",
    "leafs", "shelfs", "wolfs", "knifes", "wifes", "loafs", "thiefs",
    "foots", "tooths", "mouses", "oxes", "heros", "potatos", "tomatos",
    "echos", "quizes", "stomaches", "monarches", "criterions",
    "publically", "oldder", "reder", "flater", "planed", "prefered", "gos",
}


def top_completion(unigrams: dict[str, int], prefix: str) -> str | None:
    best = None
    for w, c in unigrams.items():
        if w.startswith(prefix):
            if best is None or c > best[1] or (c == best[1] and w < best[0]):
                best = (w, c)
    return best[0] if best else None


def check(unigrams: dict[str, int], bigrams: Counter) -> None:
    import string

    hit = set(unigrams) & FORBIDDEN
    assert not hit, f"bad inflected forms generated: {sorted(hit)}"

    initials = {w[0] for w in unigrams}
    missing = set(string.ascii_lowercase) - initials
    assert not missing, f"letters with no words: {missing}"

    bad = [w for w in unigrams if w.startswith(("iny", "inw"))]
    assert not bad, f"unexpected iny/inw words: {bad}"

    expect = {
        "t": "the", "i": "in", "in": "in", "inp": "input",
        "win": "window", "winn": "winning", "ov": "over", "laz": "lazy",
        "brow": "brown", "fox": "fox", "dog": "dog", "jumps": "jumps",
        "do": "do", "jump": "jump", "quick": "quickly",
    }
    for prefix, want in expect.items():
        got = top_completion(unigrams, prefix)
        assert got == want, f"top({prefix!r}) = {got!r}, wanted {want!r}"
    assert top_completion(unigrams, "q") != "quick"

    letter_w: Counter = Counter()
    for w, c in unigrams.items():
        for ch in w:
            letter_w[ch] += c
    ranked = [ch for ch, _ in letter_w.most_common()]
    assert ranked[:2] == ["e", "t"], f"letter ranking starts {ranked[:4]}"
    print("letter frequency ranking:", "".join(ranked))

    assert bigrams[("of", "the")] >= 5
    assert bigrams[("it", "was")] >= 5
    assert bigrams[("to", "be")] >= 2


def main() -> None:
    unigrams = build_unigrams()
    bigrams = build_bigrams(set(unigrams))
    check(unigrams, bigrams)

    OUT_DIR.mkdir(parents=True, exist_ok=True)
    uni_path = OUT_DIR / "unigrams.txt"
    with uni_path.open("w", encoding="utf-8") as f:
        f.write("# default unigram corpus: word<TAB>count\n")
        for w in sorted(unigrams):
            f.write(f"{w}\t{unigrams[w]}\n")
    bi_path = OUT_DIR / "bigrams.txt"
    with bi_path.open("w", encoding="utf-8") as f:
        f.write("# default bigram corpus: prev<TAB>next<TAB>count\n")
        for (p, n) in sorted(bigrams):
            f.write(f"{p}\t{n}\t{bigrams[(p, n)]}\n")

    print(f"wrote {len(unigrams)} unigrams -> {uni_path}")
    print(f"wrote {len(bigrams)} bigrams  -> {bi_path}")


if __name__ == "__main__":
    main()

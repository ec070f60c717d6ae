#!/usr/bin/env python3
"""Regenerate src/hatebench/data/sentiment_lexicon.tsv.

Provenance: a hand-curated seed list of polarity-bearing English words
(assembled for this project, graded on a [-1, 1] scale), expanded with
regular inflected surface forms so that scoring works on un-lemmatized
text.  Inflections inherit the seed polarity.  Output is sorted and
deterministic; rerunning this script reproduces the file byte for byte.
"""

from __future__ import annotations

import sys
from pathlib import Path

VOWELS = set("aeiou")

# kind: v = verb (+s +ed +ing), n = noun (+plural), a = adjective (bare),
#       A = adjective also emitted as -ly adverb, x = emit exactly as-is
POSITIVE = """
admire:0.6:v adore:0.8:v amaze:0.7:v amuse:0.5:v appreciate:0.6:v applaud:0.6:v
approve:0.5:v assist:0.4:v bless:0.7:v brighten:0.5:v calm:0.4:v care:0.5:v
celebrate:0.7:v charm:0.6:v cheer:0.6:v comfort:0.5:v commend:0.6:v compliment:0.6:v
congratulate:0.7:v delight:0.8:v educate:0.4:v empower:0.6:v encourage:0.6:v
endorse:0.5:v energize:0.5:v enjoy:0.7:v enrich:0.5:v entertain:0.5:v excite:0.6:v
favor:0.4:v flourish:0.6:v forgive:0.5:v glow:0.4:v heal:0.5:v help:0.5:v
honor:0.6:v improve:0.5:v impress:0.6:v inspire:0.7:v laugh:0.5:v like:0.5:v
love:0.9:v motivate:0.5:v nurture:0.5:v please:0.6:v praise:0.7:v prosper:0.6:v
protect:0.4:v recommend:0.5:v refresh:0.4:v rejoice:0.7:v relax:0.4:v relish:0.6:v
rescue:0.5:v respect:0.6:v reward:0.6:v satisfy:0.6:v save:0.4:v shine:0.5:v
smile:0.6:v soothe:0.5:v succeed:0.7:v support:0.5:v surprise:0.3:v thank:0.6:v
thrill:0.7:v thrive:0.7:v treasure:0.7:v trust:0.6:v uplift:0.6:v value:0.5:v
welcome:0.5:v win:0.7:v wow:0.7:v cherish:0.8:v embrace:0.5:v enlighten:0.5:v
graduate:0.4:v unite:0.5:v volunteer:0.4:v donate:0.5:v achieve:0.6:v
accomplish:0.6:v advance:0.4:v
beauty:0.7:n blessing:0.7:n bliss:0.9:n bonus:0.5:n champion:0.6:n charity:0.6:n
comfort:0.5:n courage:0.6:n delight:0.8:n dream:0.5:n friend:0.6:n fun:0.7:n
gem:0.6:n genius:0.7:n gift:0.6:n glory:0.7:n grace:0.6:n hero:0.7:n honor:0.6:n
hope:0.6:n joy:0.9:n kindness:0.8:n laughter:0.7:n legend:0.6:n luck:0.5:n
masterpiece:0.8:n miracle:0.8:n paradise:0.9:n peace:0.7:n pleasure:0.7:n
pride:0.5:n prize:0.6:n reward:0.6:n smile:0.6:n star:0.5:n strength:0.5:n
success:0.7:n sunshine:0.7:n talent:0.6:n treasure:0.7:n triumph:0.8:n
victory:0.8:n warmth:0.6:n winner:0.7:n wisdom:0.6:n wonder:0.6:n angel:0.7:n
beauty:0.7:n celebration:0.7:n harmony:0.7:n freedom:0.6:n justice:0.6:n
opportunity:0.5:n optimism:0.7:n passion:0.6:n
amazing:0.8:A awesome:0.9:A beautiful:0.8:A brilliant:0.9:A calm:0.4:a
charming:0.7:a cheerful:0.8:A clean:0.4:a clever:0.6:A cool:0.5:a cozy:0.6:a
cute:0.6:a dazzling:0.8:a decent:0.4:A delicious:0.8:a delightful:0.8:A
eager:0.5:A effective:0.5:A elegant:0.7:A enjoyable:0.7:a epic:0.7:a
excellent:0.9:A exceptional:0.8:A exciting:0.8:a fabulous:0.9:A fair:0.4:A
faithful:0.6:A fantastic:0.9:A fine:0.4:a flawless:0.9:A fortunate:0.7:A
fresh:0.5:A friendly:0.7:a funny:0.6:a generous:0.7:A gentle:0.6:a glad:0.6:A
glorious:0.8:A good:0.6:a gorgeous:0.9:A graceful:0.7:A grateful:0.7:A
great:0.8:A happy:0.8:A healthy:0.5:a helpful:0.6:A honest:0.6:A humble:0.5:A
ideal:0.7:A impressive:0.7:A incredible:0.9:A innocent:0.4:A inspiring:0.8:a
intelligent:0.7:A interesting:0.5:A joyful:0.9:A kind:0.7:A lovely:0.8:a
loyal:0.6:A lucky:0.6:a magnificent:0.9:A marvelous:0.9:A neat:0.5:A nice:0.6:A
noble:0.6:a optimistic:0.7:a outstanding:0.9:a peaceful:0.7:A perfect:0.9:A
pleasant:0.7:A polite:0.6:A positive:0.6:A precious:0.7:A pretty:0.6:a
proud:0.6:A pure:0.5:A radiant:0.8:A reliable:0.6:a remarkable:0.8:A rich:0.5:a
right:0.4:a safe:0.4:A satisfying:0.7:a sincere:0.6:A smart:0.6:A smooth:0.5:A
spectacular:0.9:A splendid:0.9:A strong:0.5:A stunning:0.9:A stylish:0.6:a
sublime:0.8:a super:0.8:a superb:0.9:A sweet:0.7:A talented:0.7:a terrific:0.8:a
thoughtful:0.7:A thrilling:0.8:a tidy:0.4:a top:0.5:a tremendous:0.8:A
trustworthy:0.7:a useful:0.5:a valuable:0.6:a vibrant:0.7:a victorious:0.8:A
warm:0.5:A wholesome:0.7:a wise:0.6:A wonderful:0.9:A worthy:0.6:a
yay:0.8:x yes:0.3:x bravo:0.8:x congrats:0.8:x congratulations:0.8:x
thanks:0.6:x cheers:0.6:x hooray:0.8:x phenomenal:0.9:a stellar:0.8:a
adopt:0.3:v agree:0.4:v attract:0.4:v award:0.6:v balance:0.3:v befriend:0.6:v
benefit:0.5:v bloom:0.6:v bond:0.4:v boost:0.5:v build:0.3:v captivate:0.7:v
clarify:0.3:v collaborate:0.5:v complete:0.3:v connect:0.4:v contribute:0.4:v
create:0.4:v cure:0.6:v dazzle:0.7:v defend:0.4:v discover:0.5:v earn:0.4:v
ease:0.4:v elevate:0.5:v enable:0.4:v enhance:0.5:v enchant:0.7:v excel:0.7:v
explore:0.4:v fascinate:0.6:v fix:0.4:v free:0.5:v fulfill:0.6:v gain:0.5:v
gleam:0.5:v grin:0.5:v guide:0.4:v hug:0.6:v illuminate:0.5:v include:0.4:v
invent:0.4:v invite:0.4:v kiss:0.6:v learn:0.4:v liberate:0.6:v lift:0.4:v
mend:0.4:v mentor:0.5:v nourish:0.5:v obey:0.2:v overcome:0.6:v pamper:0.6:v
perfect:0.6:v persevere:0.6:v play:0.4:v promote:0.4:v recover:0.5:v renew:0.5:v
repair:0.4:v restore:0.5:v reunite:0.6:v share:0.4:v simplify:0.4:v soar:0.7:v
solve:0.5:v sparkle:0.7:v strengthen:0.5:v teach:0.4:v tolerate:0.2:v
transform:0.4:v understand:0.4:v wish:0.3:v
ability:0.4:n abundance:0.6:n accomplishment:0.6:n admiration:0.6:n advantage:0.5:n
adventure:0.5:n affection:0.7:n ally:0.5:n ambition:0.4:n applause:0.7:n
appreciation:0.6:n aspiration:0.5:n award:0.6:n beach:0.3:n benefit:0.5:n
breakthrough:0.7:n brilliance:0.8:n buddy:0.6:n candy:0.4:n compassion:0.7:n
confidence:0.6:n creativity:0.6:n darling:0.7:n dedication:0.5:n devotion:0.6:n
dignity:0.6:n diamond:0.5:n empathy:0.7:n enthusiasm:0.7:n excellence:0.8:n
faith:0.5:n family:0.5:n favorite:0.6:n feast:0.5:n flower:0.4:n fortune:0.6:n
generosity:0.7:n gratitude:0.8:n growth:0.5:n health:0.5:n heaven:0.8:n
holiday:0.5:n honesty:0.6:n hug:0.6:n humor:0.5:n improvement:0.5:n innovation:0.5:n
integrity:0.7:n intelligence:0.6:n jewel:0.6:n kiss:0.6:n loyalty:0.6:n
marvel:0.7:n mercy:0.6:n merit:0.5:n music:0.4:n party:0.5:n patience:0.5:n
perfection:0.9:n praise:0.7:n progress:0.5:n promise:0.4:n prosperity:0.7:n
rainbow:0.6:n relief:0.5:n respect:0.6:n reunion:0.6:n safety:0.5:n
satisfaction:0.7:n serenity:0.7:n skill:0.5:n solution:0.5:n spirit:0.4:n
support:0.5:n surprise:0.3:n sweetheart:0.8:n sympathy:0.5:n trust:0.6:n
truth:0.5:n vacation:0.6:n virtue:0.6:n vitality:0.6:n welfare:0.4:n wellness:0.6:n
able:0.4:a abundant:0.6:a accurate:0.4:a adorable:0.8:A adventurous:0.5:a
affectionate:0.7:A agreeable:0.5:A ambitious:0.5:A angelic:0.8:a appealing:0.6:a
attractive:0.6:A authentic:0.5:A balanced:0.4:a blessed:0.8:a blissful:0.9:A
bold:0.4:A breathtaking:0.9:a bright:0.6:A capable:0.5:a caring:0.7:a
classic:0.4:a colorful:0.5:a comfortable:0.6:A compassionate:0.8:A competent:0.5:A
confident:0.6:A considerate:0.7:A courageous:0.7:A creative:0.6:A dedicated:0.5:a
dependable:0.6:a devoted:0.6:A divine:0.8:A dynamic:0.5:a easy:0.4:a
efficient:0.5:A encouraging:0.6:a energetic:0.6:A enthusiastic:0.7:A ethical:0.5:A
exquisite:0.9:A extraordinary:0.8:A exuberant:0.7:A faultless:0.9:A favorable:0.6:A
fearless:0.6:A fit:0.4:a flourishing:0.7:a forgiving:0.6:a free:0.5:A
genuine:0.6:A gifted:0.7:a golden:0.6:a graceful:0.7:a gracious:0.7:A
grand:0.6:A handsome:0.7:A harmonious:0.7:A heavenly:0.9:a heroic:0.8:a
hilarious:0.7:a hopeful:0.6:A humorous:0.5:A influential:0.5:a ingenious:0.7:A
innovative:0.6:a inspirational:0.8:a inventive:0.6:a jolly:0.7:a jubilant:0.8:A
keen:0.5:A legendary:0.7:a lively:0.6:a lovable:0.8:a loving:0.8:A luminous:0.7:A
luxurious:0.7:A magical:0.8:A majestic:0.8:A memorable:0.6:a merry:0.7:a
mighty:0.5:A miraculous:0.8:A modern:0.3:a modest:0.4:A motivated:0.5:a
nifty:0.5:a nurturing:0.6:a obedient:0.3:A open:0.3:a original:0.4:A
passionate:0.7:A patient:0.5:A phenomenal:0.9:a playful:0.6:A pleasing:0.6:A
plentiful:0.6:A powerful:0.5:A praiseworthy:0.8:a premium:0.6:a priceless:0.8:a
productive:0.5:A professional:0.4:A promising:0.6:a prosperous:0.7:A
refreshing:0.6:a resilient:0.6:a resourceful:0.6:A respectful:0.7:A
responsible:0.5:A rewarding:0.7:a robust:0.5:A romantic:0.6:A secure:0.5:A
selfless:0.7:A sensational:0.8:A serene:0.7:A sharp:0.5:A shiny:0.5:a skillful:0.6:A
sophisticated:0.5:a sparkling:0.7:a spirited:0.6:a spotless:0.7:A steady:0.4:A
stunning:0.9:a successful:0.7:A sunny:0.6:a supportive:0.7:a supreme:0.7:A
swift:0.4:A tender:0.6:A thankful:0.7:A tolerant:0.5:A tranquil:0.7:a
triumphant:0.8:A trusty:0.6:a truthful:0.6:A unbeatable:0.8:a unique:0.4:A
upbeat:0.6:a uplifting:0.7:a versatile:0.5:a vigorous:0.5:A virtuous:0.7:A
vivacious:0.7:A welcoming:0.6:a wondrous:0.8:A worthwhile:0.6:a zealous:0.5:A
"""

NEGATIVE = """
abuse:-0.8:v accuse:-0.5:v annoy:-0.5:v attack:-0.6:v betray:-0.8:v blame:-0.5:v
bother:-0.4:v break:-0.4:v bully:-0.8:v cheat:-0.7:v complain:-0.5:v condemn:-0.6:v
corrupt:-0.7:v criticize:-0.5:v cry:-0.5:v curse:-0.6:v damage:-0.6:v deceive:-0.7:v
degrade:-0.7:v demean:-0.7:v despise:-0.8:v destroy:-0.7:v disappoint:-0.6:v
discriminate:-0.8:v disgust:-0.8:v dishonor:-0.7:v dislike:-0.5:v disrespect:-0.7:v
distort:-0.5:v disturb:-0.5:v dread:-0.6:v embarrass:-0.5:v enrage:-0.8:v
exclude:-0.5:v exploit:-0.7:v fail:-0.6:v fear:-0.6:v fight:-0.5:v frighten:-0.6:v
frustrate:-0.6:v harass:-0.8:v harm:-0.6:v hate:-0.9:v humiliate:-0.8:v hurt:-0.6:v
ignore:-0.4:v insult:-0.7:v intimidate:-0.7:v irritate:-0.5:v kill:-0.8:v lie:-0.6:v
loathe:-0.9:v lose:-0.5:v manipulate:-0.6:v menace:-0.7:v mock:-0.6:v molest:-0.9:v
murder:-0.9:v neglect:-0.6:v offend:-0.6:v oppress:-0.8:v panic:-0.6:v persecute:-0.8:v
poison:-0.7:v pollute:-0.5:v provoke:-0.5:v punish:-0.5:v rage:-0.7:v reject:-0.5:v
ridicule:-0.7:v rob:-0.7:v ruin:-0.7:v scare:-0.6:v scold:-0.5:v scream:-0.5:v
shame:-0.7:v slander:-0.8:v smear:-0.6:v steal:-0.7:v suffer:-0.7:v terrify:-0.8:v
terrorize:-0.9:v threaten:-0.7:v torment:-0.8:v torture:-0.9:v trash:-0.6:v
victimize:-0.8:v vilify:-0.8:v violate:-0.8:v whine:-0.4:v worry:-0.5:v wreck:-0.6:v
anger:-0.6:n agony:-0.8:n bigot:-0.9:n bigotry:-0.9:n bully:-0.8:n chaos:-0.6:n
coward:-0.7:n creep:-0.6:n crime:-0.6:n criminal:-0.6:n crisis:-0.6:n cruelty:-0.8:n
danger:-0.6:n death:-0.7:n defeat:-0.5:n disaster:-0.8:n disgrace:-0.7:n
enemy:-0.6:n evil:-0.9:n failure:-0.7:n fool:-0.6:n fraud:-0.7:n garbage:-0.7:n
grief:-0.7:n hatred:-0.9:n hazard:-0.5:n hell:-0.7:n horror:-0.8:n hostility:-0.7:n
idiot:-0.8:n injustice:-0.7:n jerk:-0.7:n liar:-0.7:n loser:-0.7:n menace:-0.7:n
mess:-0.4:n misery:-0.8:n mistake:-0.4:n monster:-0.7:n nightmare:-0.8:n pain:-0.6:n
pest:-0.6:n plague:-0.7:n poison:-0.7:n poverty:-0.6:n prejudice:-0.8:n problem:-0.4:n
racism:-0.9:n racist:-0.9:n rat:-0.5:n riot:-0.6:n rubbish:-0.6:n rumor:-0.4:n
scandal:-0.6:n scum:-0.9:n sexism:-0.9:n sexist:-0.9:n shame:-0.7:n sorrow:-0.7:n
stress:-0.5:n terror:-0.8:n terrorist:-0.9:n threat:-0.6:n tragedy:-0.8:n traitor:-0.8:n
trouble:-0.5:n tyrant:-0.8:n victim:-0.5:n villain:-0.7:n violence:-0.8:n war:-0.7:n
waste:-0.5:n xenophobia:-0.9:n xenophobe:-0.9:n hypocrite:-0.7:n ignorance:-0.6:n
abysmal:-0.9:a aggressive:-0.5:A angry:-0.7:A annoying:-0.6:a appalling:-0.9:A
arrogant:-0.7:A awful:-0.9:A bad:-0.6:A barbaric:-0.8:a bitter:-0.6:A bleak:-0.6:A
bogus:-0.6:a boring:-0.5:a broken:-0.5:a brutal:-0.8:A careless:-0.5:A cheap:-0.4:A
corrupt:-0.7:A cowardly:-0.7:a crazy:-0.5:a creepy:-0.6:a cruel:-0.8:A crude:-0.5:A
cursed:-0.7:a deadly:-0.7:a deceitful:-0.7:A defective:-0.5:a degrading:-0.8:a
deplorable:-0.8:a depressing:-0.7:a despicable:-0.9:a dirty:-0.5:a disappointing:-0.7:a
disgraceful:-0.8:A disgusting:-0.9:A dishonest:-0.7:A dismal:-0.7:A disrespectful:-0.7:A
dreadful:-0.9:A dumb:-0.7:a egregious:-0.8:a embarrassing:-0.6:a evil:-0.9:a
fake:-0.6:a filthy:-0.8:a foolish:-0.6:A foul:-0.7:a fraudulent:-0.8:A frightening:-0.7:a
gross:-0.7:A grim:-0.6:A gruesome:-0.8:a harmful:-0.6:A harsh:-0.6:A hateful:-0.9:A
heartless:-0.8:A hideous:-0.8:A horrible:-0.9:A horrific:-0.9:a hostile:-0.7:a
hurtful:-0.7:a ignorant:-0.7:A immoral:-0.7:A inferior:-0.6:a insane:-0.6:A
insulting:-0.7:a lame:-0.5:a lousy:-0.7:a mad:-0.5:A malicious:-0.8:A mean:-0.6:a
miserable:-0.8:A nasty:-0.8:A offensive:-0.7:A outrageous:-0.7:A painful:-0.7:A
pathetic:-0.8:A petty:-0.5:a poor:-0.5:A racist:-0.9:a repulsive:-0.9:a ridiculous:-0.6:A
rotten:-0.7:a rude:-0.7:A ruthless:-0.8:A sad:-0.6:A savage:-0.7:A selfish:-0.6:A
shameful:-0.8:A shameless:-0.7:A shoddy:-0.6:a sick:-0.5:a sinister:-0.7:a sloppy:-0.5:a
stupid:-0.8:A terrible:-0.9:A toxic:-0.8:a tragic:-0.8:A ugly:-0.7:a unacceptable:-0.7:a
unfair:-0.6:A unhappy:-0.7:A unjust:-0.7:A unpleasant:-0.6:A unworthy:-0.6:a
useless:-0.7:A vicious:-0.8:A vile:-0.9:a violent:-0.8:A vulgar:-0.7:A weak:-0.5:A
wicked:-0.8:A worthless:-0.8:a wretched:-0.8:A wrong:-0.5:A
ugh:-0.6:x damn:-0.6:x dammit:-0.7:x crap:-0.6:x sucks:-0.7:x suck:-0.7:x
wtf:-0.7:x smh:-0.4:x ew:-0.6:x eww:-0.7:x meh:-0.3:x nope:-0.3:x
abandon:-0.6:v abduct:-0.8:v abhor:-0.9:v afflict:-0.7:v aggravate:-0.5:v
alienate:-0.6:v argue:-0.4:v assault:-0.8:v avoid:-0.3:v backstab:-0.8:v
ban:-0.5:v banish:-0.6:v beat:-0.5:v beg:-0.4:v belittle:-0.7:v blackmail:-0.8:v
bleed:-0.5:v block:-0.3:v boo:-0.5:v bore:-0.4:v burn:-0.5:v collapse:-0.6:v
confuse:-0.4:v conspire:-0.6:v crash:-0.6:v cringe:-0.5:v crush:-0.5:v decay:-0.6:v
defame:-0.8:v demolish:-0.6:v deny:-0.4:v deprive:-0.6:v desert:-0.6:v
despair:-0.8:v detest:-0.9:v devastate:-0.8:v disapprove:-0.5:v discard:-0.4:v
dismiss:-0.4:v disobey:-0.5:v distress:-0.6:v doubt:-0.4:v drown:-0.7:v
dump:-0.5:v enslave:-0.9:v erode:-0.5:v evict:-0.6:v excoriate:-0.7:v expel:-0.6:v
fake:-0.5:v falsify:-0.7:v fume:-0.6:v grieve:-0.7:v gripe:-0.5:v growl:-0.4:v
grumble:-0.4:v hinder:-0.5:v hoard:-0.4:v infest:-0.7:v inflame:-0.6:v
injure:-0.7:v invade:-0.6:v jeer:-0.6:v lament:-0.6:v lash:-0.5:v litter:-0.4:v
malign:-0.8:v mistreat:-0.8:v misuse:-0.5:v moan:-0.4:v mourn:-0.7:v nag:-0.5:v
obstruct:-0.5:v overreact:-0.4:v pester:-0.5:v pity:-0.4:v plot:-0.4:v
pressure:-0.4:v quarrel:-0.5:v quit:-0.4:v regret:-0.6:v resent:-0.7:v
revile:-0.8:v sabotage:-0.8:v scam:-0.8:v scorn:-0.7:v shatter:-0.5:v shun:-0.6:v
slam:-0.5:v slap:-0.6:v smash:-0.5:v sneer:-0.6:v spit:-0.5:v spoil:-0.5:v
stalk:-0.8:v starve:-0.7:v stink:-0.7:v strangle:-0.9:v struggle:-0.5:v
sue:-0.5:v taunt:-0.7:v trick:-0.5:v trip:-0.3:v vandalize:-0.7:v vomit:-0.7:v
wail:-0.5:v weep:-0.6:v wither:-0.5:v wound:-0.7:v
abuse:-0.8:n ache:-0.5:n addict:-0.6:n adversary:-0.5:n adversity:-0.6:n
ailment:-0.5:n anarchy:-0.6:n anguish:-0.8:n annoyance:-0.5:n anxiety:-0.6:n
apathy:-0.5:n assault:-0.8:n atrocity:-0.9:n bandit:-0.6:n beast:-0.5:n
betrayal:-0.8:n blunder:-0.5:n bomb:-0.7:n boredom:-0.4:n brat:-0.6:n
brute:-0.7:n burden:-0.5:n calamity:-0.8:n casualty:-0.7:n catastrophe:-0.9:n
clown:-0.4:n collapse:-0.6:n complaint:-0.4:n conflict:-0.5:n conspiracy:-0.6:n
contempt:-0.7:n controversy:-0.4:n corruption:-0.7:n crook:-0.7:n curse:-0.6:n
debt:-0.5:n deceit:-0.7:n delay:-0.3:n delusion:-0.5:n demon:-0.7:n denial:-0.4:n
depression:-0.7:n despair:-0.8:n destruction:-0.7:n dictator:-0.7:n dirt:-0.4:n
discomfort:-0.4:n disease:-0.6:n dispute:-0.4:n distrust:-0.6:n divorce:-0.6:n
doom:-0.8:n drought:-0.6:n dungeon:-0.5:n epidemic:-0.7:n error:-0.4:n
excuse:-0.3:n explosion:-0.6:n famine:-0.8:n fanatic:-0.6:n fault:-0.4:n
felony:-0.7:n fiasco:-0.7:n filth:-0.8:n flaw:-0.4:n flood:-0.5:n foe:-0.5:n
gloom:-0.6:n greed:-0.7:n grievance:-0.5:n grudge:-0.6:n guilt:-0.6:n gunman:-0.8:n
harassment:-0.8:n hardship:-0.6:n havoc:-0.7:n hoax:-0.6:n homicide:-0.9:n
hooligan:-0.7:n hostage:-0.7:n humiliation:-0.8:n hypocrisy:-0.7:n illness:-0.6:n
infection:-0.6:n inferno:-0.7:n insult:-0.7:n intolerance:-0.8:n jail:-0.6:n
jealousy:-0.6:n junk:-0.5:n killer:-0.8:n lawsuit:-0.5:n lunatic:-0.7:n
malice:-0.8:n mayhem:-0.7:n mediocrity:-0.5:n mischief:-0.4:n mob:-0.5:n
mold:-0.4:n mugger:-0.8:n nonsense:-0.5:n outrage:-0.7:n paranoia:-0.6:n
parasite:-0.7:n peril:-0.7:n pessimism:-0.6:n pickpocket:-0.7:n pollution:-0.6:n
prison:-0.6:n psycho:-0.7:n punishment:-0.5:n rebel:-0.4:n recession:-0.6:n
regret:-0.6:n revenge:-0.7:n robbery:-0.7:n sadness:-0.7:n scoundrel:-0.7:n
shooting:-0.8:n sickness:-0.6:n sin:-0.6:n slob:-0.6:n slur:-0.8:n smog:-0.5:n
snake:-0.5:n sorrow:-0.7:n stain:-0.4:n stench:-0.7:n stereotype:-0.6:n
strife:-0.6:n suspicion:-0.5:n swindler:-0.8:n theft:-0.7:n thief:-0.7:n
thug:-0.8:n trauma:-0.8:n turmoil:-0.6:n vermin:-0.8:n vice:-0.6:n
warfare:-0.7:n weakness:-0.5:n wound:-0.7:n wrath:-0.8:n
abrasive:-0.5:a absurd:-0.6:A acrid:-0.5:a agonizing:-0.8:A alarming:-0.6:A
anxious:-0.6:A atrocious:-0.9:A awkward:-0.4:A belligerent:-0.7:A bizarre:-0.4:A
bland:-0.4:a bloody:-0.6:a brash:-0.5:A brainless:-0.7:A careless:-0.5:a
chaotic:-0.6:a clumsy:-0.5:a cold:-0.4:A combative:-0.6:a conceited:-0.6:A
condescending:-0.7:a confusing:-0.4:a contemptible:-0.8:a contemptuous:-0.8:A
corrosive:-0.5:a crafty:-0.4:A cranky:-0.5:a crooked:-0.6:A cynical:-0.5:A
dangerous:-0.7:A dark:-0.4:a deadly:-0.7:a defiant:-0.5:A dehumanizing:-0.9:a
delusional:-0.6:a demented:-0.7:a deranged:-0.7:a desolate:-0.6:A desperate:-0.6:A
destructive:-0.7:A detestable:-0.9:a devious:-0.6:A dire:-0.7:a disastrous:-0.8:A
disloyal:-0.7:A dismissive:-0.5:a disorderly:-0.5:a distasteful:-0.6:A
disturbing:-0.7:a doomed:-0.7:a dubious:-0.5:A dull:-0.4:a dysfunctional:-0.6:a
eerie:-0.5:A envious:-0.6:A erratic:-0.5:A explosive:-0.5:A faulty:-0.5:a
feeble:-0.5:A fierce:-0.5:A flagrant:-0.7:A flimsy:-0.5:a forgettable:-0.4:a
fragile:-0.4:a frantic:-0.5:A fraught:-0.5:a frivolous:-0.4:A furious:-0.8:A
ghastly:-0.8:a glum:-0.5:A greedy:-0.7:A grouchy:-0.5:a grumpy:-0.5:a
haggard:-0.5:a hapless:-0.5:A haphazard:-0.5:a hasty:-0.4:A hazardous:-0.6:A
helpless:-0.5:A hollow:-0.4:A hopeless:-0.8:A humiliating:-0.8:a icky:-0.6:a
idiotic:-0.8:A ill:-0.5:a illegal:-0.6:A illogical:-0.5:A impatient:-0.5:A
inadequate:-0.6:A incompetent:-0.7:A inconsiderate:-0.6:A indecent:-0.6:A
indifferent:-0.4:A inept:-0.6:A infamous:-0.7:A infuriating:-0.8:a insidious:-0.7:A
insolent:-0.6:A intolerable:-0.7:A intolerant:-0.8:A irrational:-0.5:A
irresponsible:-0.6:A irritating:-0.6:a joyless:-0.6:a lazy:-0.5:A lethal:-0.7:a
loathsome:-0.9:a lonely:-0.6:a ludicrous:-0.6:A macabre:-0.6:a mediocre:-0.5:a
melancholy:-0.5:a messy:-0.4:a mindless:-0.6:A moldy:-0.5:a moody:-0.4:a
morbid:-0.6:A mundane:-0.3:a murderous:-0.9:A murky:-0.4:a naive:-0.4:A
naughty:-0.4:a nauseating:-0.8:a negative:-0.5:A nervous:-0.4:A noisy:-0.4:a
obnoxious:-0.7:A obscene:-0.8:A obsolete:-0.4:a nondescript:-0.3:a
paltry:-0.5:a paranoid:-0.6:a pitiful:-0.7:A pointless:-0.6:A pompous:-0.6:A
precarious:-0.5:A pretentious:-0.6:A primitive:-0.4:a questionable:-0.5:a
rabid:-0.7:a rancid:-0.7:a reckless:-0.7:A redundant:-0.4:A regrettable:-0.6:A
repugnant:-0.9:A restless:-0.4:A rigid:-0.4:A rowdy:-0.5:a rusty:-0.4:a
scandalous:-0.7:A scary:-0.6:a scornful:-0.7:A screeching:-0.5:a senseless:-0.7:A
severe:-0.6:A shabby:-0.5:a shady:-0.5:a shallow:-0.4:a shocking:-0.7:a
sickening:-0.8:a sinful:-0.7:A skeptical:-0.4:A slimy:-0.6:a sour:-0.4:a
spiteful:-0.8:A stale:-0.4:a stern:-0.4:A stormy:-0.4:a stressful:-0.6:a
subpar:-0.5:a suspicious:-0.5:A tacky:-0.5:a tasteless:-0.5:A tedious:-0.5:A
tense:-0.4:A treacherous:-0.8:A troublesome:-0.5:a twisted:-0.6:a tyrannical:-0.8:A
unbearable:-0.8:A uncivil:-0.6:A uncomfortable:-0.5:A unethical:-0.7:A
unforgivable:-0.8:a unfortunate:-0.6:A ungrateful:-0.6:A unreliable:-0.6:a
unsafe:-0.6:A untrustworthy:-0.7:a vindictive:-0.8:A volatile:-0.5:a
wasteful:-0.5:A wobbly:-0.4:a woeful:-0.7:A
"""


def doubles_final(word: str) -> bool:
    # short CVC stems double the final consonant: stop -> stopped
    if len(word) < 3:
        return False
    a, b, c = word[-3], word[-2], word[-1]
    return c not in VOWELS and c not in "wxy" and b in VOWELS and a not in VOWELS


def verb_forms(word: str) -> list[str]:
    forms = [word]
    if word.endswith("e"):
        forms += [word + "s", word + "d", word[:-1] + "ing"]
    elif word.endswith("y") and len(word) > 1 and word[-2] not in VOWELS:
        forms += [word[:-1] + "ies", word[:-1] + "ied", word + "ing"]
    elif word.endswith(("s", "x", "z", "ch", "sh")):
        forms += [word + "es", word + "ed", word + "ing"]
    elif doubles_final(word):
        forms += [word + "s", word + word[-1] + "ed", word + word[-1] + "ing"]
    else:
        forms += [word + "s", word + "ed", word + "ing"]
    return forms


def noun_forms(word: str) -> list[str]:
    if word.endswith("y") and len(word) > 1 and word[-2] not in VOWELS:
        return [word, word[:-1] + "ies"]
    if word.endswith(("s", "x", "z", "ch", "sh")):
        return [word, word + "es"]
    return [word, word + "s"]


def expand(block: str) -> dict[str, float]:
    out: dict[str, float] = {}
    for item in block.split():
        word, value, kind = item.rsplit(":", 2)
        value = float(value)
        if kind == "v":
            forms = verb_forms(word)
        elif kind == "n":
            forms = noun_forms(word)
        elif kind == "A":
            forms = [word, word + "ly"]
        else:
            forms = [word]
        for form in forms:
            out.setdefault(form, value)
    return out


def main() -> int:
    table: dict[str, float] = {}
    for block in (POSITIVE, NEGATIVE):
        for word, value in expand(block).items():
            table.setdefault(word, value)
    out_path = Path(__file__).resolve().parent.parent / "src" / "hatebench" / "data" / "sentiment_lexicon.tsv"
    lines = ["# word<TAB>polarity in [-1,1]; generated by tools/gen_lexicon.py"]
    lines += [f"{word}\t{value}" for word, value in sorted(table.items())]
    out_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(table)} entries to {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

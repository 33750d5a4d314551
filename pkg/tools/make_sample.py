"""Regenerate the bundled Polish sample corpus (src/stoprake/data/sample_pl).

The documents imitate public procurement appeal rulings: shared procedural
sentences around topic-specific noun phrases, so that function words are
spread across all documents and topical vocabulary clusters by topic.

    python tools/make_sample.py
"""

import math
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "stoprake" / "data" / "sample_pl"

TOPICS = {
    "odpady": {
        "np": [
            ("odbieranie odpadów komunalnych", "odbierania odpadów komunalnych"),
            ("zagospodarowanie odpadów komunalnych", "zagospodarowania odpadów komunalnych"),
            ("selektywna zbiórka odpadów", "selektywnej zbiórki odpadów"),
            ("transport odpadów do regionalnej instalacji", "transportu odpadów do regionalnej instalacji"),
            ("odbiór odpadów od właścicieli nieruchomości zamieszkałych", "odbioru odpadów od właścicieli nieruchomości zamieszkałych"),
        ],
        "firms": ["Przedsiębiorstwo Usług Komunalnych Empol", "Sita Małopolska", "Remondis Kraków", "Eko Serwis"],
        "extra": [
            "Gmina wskazała, że punkt selektywnego zbierania odpadów komunalnych musi działać przez cały rok.",
            "Wykonawca dysponuje bazą magazynowo transportową oraz pojazdami przystosowanymi do odbierania odpadów.",
            "Harmonogram wywozu odpadów zmieszanych przewiduje odbiór co dwa tygodnie.",
            "Odpady biodegradowalne mają być przekazywane do instalacji mechaniczno biologicznego przetwarzania.",
        ],
    },
    "drogi": {
        "np": [
            ("roboty budowlane", "robót budowlanych"),
            ("przebudowa drogi wojewódzkiej", "przebudowy drogi wojewódzkiej"),
            ("budowa kanalizacji sanitarnej", "budowy kanalizacji sanitarnej"),
            ("remont mostu drogowego", "remontu mostu drogowego"),
            ("budowa obwodnicy miasta", "budowy obwodnicy miasta"),
        ],
        "firms": ["Budimex", "Strabag", "Skanska", "Generalna Dyrekcja Dróg Krajowych i Autostrad"],
        "extra": [
            "Kierownik budowy powinien posiadać uprawnienia budowlane do kierowania robotami w specjalności drogowej.",
            "Wykaz wykonanych robót budowlanych nie zawierał informacji o wartości nawierzchni bitumicznej.",
            "Generalnej Dyrekcji Dróg Krajowych i Autostrad przysługuje prawo kontroli jakości mieszanki mineralno asfaltowej.",
            "Kosztorys ofertowy obejmował roboty ziemne, podbudowę oraz oznakowanie pionowe.",
        ],
    },
    "informatyka": {
        "np": [
            ("dostawa sprzętu komputerowego", "dostawy sprzętu komputerowego"),
            ("wdrożenie systemu informatycznego", "wdrożenia systemu informatycznego"),
            ("serwis oprogramowania", "serwisu oprogramowania"),
            ("licencje oprogramowania biurowego", "licencji oprogramowania biurowego"),
            ("rozbudowa serwerowni", "rozbudowy serwerowni"),
        ],
        "firms": ["Asseco Poland", "Comarch", "Sygnity", "Konsorcjum Informatyczne Nowak"],
        "extra": [
            "Oferowane serwery kasetowe muszą obsługiwać wirtualizację i redundantne zasilacze.",
            "System informatyczny ma zapewnić integrację z elektroniczną platformą usług administracji publicznej.",
            "Zamawiający wymagał przeprowadzenia szkoleń dla administratorów systemu informatycznego.",
            "Przepustowość macierzy dyskowej została określona w parametrach technicznych załącznika.",
        ],
    },
    "medycyna": {
        "np": [
            ("dostawa aparatury medycznej", "dostawy aparatury medycznej"),
            ("tomograf komputerowy", "tomografu komputerowego"),
            ("wyroby medyczne jednorazowego użytku", "wyrobów medycznych jednorazowego użytku"),
            ("sprzęt do diagnostyki obrazowej", "sprzętu do diagnostyki obrazowej"),
            ("samodzielny publiczny szpital kliniczny", "samodzielnego publicznego szpitala klinicznego"),
        ],
        "firms": ["GE Medical Systems Polska", "Siemens Healthcare", "Philips Polska", "Medtronic Poland"],
        "extra": [
            "Aparat rentgenowski powinien posiadać detektor cyfrowy o wysokiej rozdzielczości.",
            "Samodzielny publiczny szpital kliniczny wymagał autoryzowanego serwisu gwarancyjnego.",
            "Parametry tomografu komputerowego zostały szczegółowo opisane w formularzu cenowym.",
            "Wyroby medyczne muszą posiadać deklarację zgodności oraz oznakowanie CE.",
        ],
    },
    "kolej": {
        "np": [
            ("modernizacja linii kolejowej", "modernizacji linii kolejowej"),
            ("przebudowa stacji kolejowej", "przebudowy stacji kolejowej"),
            ("sterowanie ruchem kolejowym", "sterowania ruchem kolejowym"),
            ("wymiana nawierzchni torowej", "wymiany nawierzchni torowej"),
            ("budowa peronów pasażerskich", "budowy peronów pasażerskich"),
        ],
        "firms": ["PKP Polskie Linie Kolejowe", "Trakcja Polska", "Torpol", "Kolejowe Zakłady Nawierzchni"],
        "extra": [
            "PKP Polskie Linie Kolejowe prowadzą inwestycję w ramach programu unijnego.",
            "Urządzenia sterowania ruchem kolejowym wymagają świadectwa dopuszczenia do eksploatacji.",
            "Zamknięcia torowe muszą zostać uzgodnione z zarządcą infrastruktury kolejowej.",
            "Wykonawca zobowiązał się do wymiany podkładów kolejowych na odcinku szlakowym.",
        ],
    },
}

MONTHS = ["stycznia", "lutego", "marca", "kwietnia", "maja", "czerwca", "lipca",
          "sierpnia", "września", "października", "listopada", "grudnia"]

GENERIC = [
    "Krajowa Izba Odwoławcza po rozpoznaniu na rozprawie w dniu {date} r. odwołania wniesionego przez wykonawcę {firm} w postępowaniu o udzielenie zamówienia publicznego, którego przedmiotem jest {np}, orzeka, że odwołanie {verdict}.",
    "Zamawiający prowadzi postępowanie w trybie przetargu nieograniczonego, a ogłoszenie o zamówieniu zostało opublikowane w Dzienniku Urzędowym Unii Europejskiej w dniu {date} r.",
    "Odwołujący zarzucił zamawiającemu naruszenie przepisów ustawy Prawo zamówień publicznych, w szczególności art. {art} ust. {n} pkt {m} ustawy.",
    "Izba ustaliła, że wykonawca nie wykazał spełniania warunku udziału w postępowaniu w zakresie {gen}.",
    "W ocenie Izby zarzut dotyczący {gen} nie zasługuje na uwzględnienie, ponieważ zamawiający prawidłowo ocenił ofertę.",
    "Zgodnie z treścią specyfikacji istotnych warunków zamówienia wykonawca był zobowiązany do przedstawienia wykazu {gen} wraz z dowodami, że zostały one wykonane należycie.",
    "Przedmiotem zamówienia jest {np}, a wartość zamówienia przekracza kwoty określone w przepisach wydanych na podstawie art. 11 ust. 8 ustawy.",
    "Izba nie podzieliła stanowiska odwołującego, że oferta wykonawcy {firm} powinna zostać odrzucona.",
    "O kosztach postępowania odwoławczego orzeczono stosownie do jego wyniku na podstawie art. 192 ust. 9 i 10 ustawy.",
    "Zamawiający wezwał wykonawcę do uzupełnienia dokumentów, jednak wykonawca nie złożył wyjaśnień w wyznaczonym terminie.",
    "Wykonawca wskazał, że posiada doświadczenie w zakresie {gen}.",
    "Na podstawie zgromadzonego materiału dowodowego Izba uznała, że opis przedmiotu zamówienia w zakresie {gen} jest jednoznaczny i wyczerpujący.",
    "Przystępujący po stronie zamawiającego wniósł o oddalenie odwołania w całości.",
    "Pismem z dnia {date} r. zamawiający poinformował wykonawców o wyborze najkorzystniejszej oferty.",
    "Wykonawca {firm} złożył ofertę z najniższą ceną, lecz nie załączył do niej formularza ofertowego.",
    "Izba zważyła, co następuje: odwołanie nie zawiera braków formalnych i zostało wniesione w terminie.",
    "Na podstawie art. 89 ust. 1 pkt 2 ustawy zamawiający odrzuca ofertę, jeżeli jej treść nie odpowiada treści specyfikacji.",
    "Spółka z ograniczoną odpowiedzialnością należy do tej samej grupy kapitałowej co przystępujący.",
    "Zdaniem odwołującego cena oferty wykonawcy {firm} jest rażąco niska w stosunku do przedmiotu zamówienia.",
]

VERDICTS = ["oddala", "uwzględnia", "odrzuca"]


def make_doc(rng: random.Random, topic: dict) -> str:
    def fill(tpl):
        nom, gen = rng.choice(topic["np"])
        return tpl.format(
            date=f"{rng.randint(1, 28)} {rng.choice(MONTHS)} {rng.randint(2008, 2013)}",
            firm=rng.choice(topic["firms"]),
            np=nom,
            gen=gen,
            verdict=rng.choice(VERDICTS),
            art=rng.choice([22, 24, 26, 89, 90, 91]),
            n=rng.randint(1, 4),
            m=rng.randint(1, 10),
        )

    # lengths spread over an order of magnitude, templates may repeat
    n_generic = int(round(math.exp(rng.uniform(math.log(4), math.log(40)))))
    n_topic = max(1, n_generic // rng.randint(2, 6))
    sentences = [fill(GENERIC[0])]
    body = rng.choices(GENERIC[1:], k=n_generic) + rng.choices(topic["extra"], k=n_topic)
    rng.shuffle(body)
    sentences += [fill(s) for s in body]
    paragraphs, i = [], 0
    while i < len(sentences):
        k = rng.randint(2, 4)
        paragraphs.append(" ".join(sentences[i : i + k]))
        i += k
    return "\n\n".join(paragraphs) + "\n"


def main():
    rng = random.Random(20140917)
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.txt"):
        old.unlink()
    names = sorted(TOPICS)
    for i in range(50):
        topic = names[i % len(names)]
        text = make_doc(rng, TOPICS[topic])
        (OUT / f"kio_{i + 1:03d}_{topic}.txt").write_text(text, encoding="utf-8")


if __name__ == "__main__":
    main()

/* Sorting a linked sequence by value rewiring. */

struct Item {
    int key;
    struct Item *next;
};

struct Item *item_prepend(struct Item *head, int key) {
    struct Item *it = malloc(16);
    it->key = key;
    it->next = head;
    return it;
}

int is_sorted(struct Item *head) {
    while (head != NULL && head->next != NULL) {
        if (head->key > head->next->key) {
            return 0;
        }
        head = head->next;
    }
    return 1;
}

void bubble_sort(struct Item *head) {
    int swapped = 1;
    int tmp;
    struct Item *cur;
    while (swapped) {
        swapped = 0;
        for (cur = head; cur != NULL && cur->next != NULL; cur = cur->next) {
            if (cur->key > cur->next->key) {
                tmp = cur->key;
                cur->key = cur->next->key;
                cur->next->key = tmp;
                swapped = 1;
            }
        }
    }
}

struct Item *insert_sorted(struct Item *sorted, struct Item *item) {
    struct Item *cur;
    if (sorted == NULL || item->key <= sorted->key) {
        item->next = sorted;
        return item;
    }
    cur = sorted;
    while (cur->next != NULL && cur->next->key < item->key) {
        cur = cur->next;
    }
    item->next = cur->next;
    cur->next = item;
    return sorted;
}

struct Item *insertion_sort(struct Item *head) {
    struct Item *sorted = NULL;
    struct Item *next;
    while (head != NULL) {
        next = head->next;
        sorted = insert_sorted(sorted, head);
        head = next;
    }
    return sorted;
}

struct Item *merge(struct Item *a, struct Item *b) {
    if (a == NULL) {
        return b;
    }
    if (b == NULL) {
        return a;
    }
    if (a->key <= b->key) {
        a->next = merge(a->next, b);
        return a;
    }
    b->next = merge(a, b->next);
    return b;
}

struct Item *split_half(struct Item *head) {
    struct Item *slow = head;
    struct Item *fast = head->next;
    struct Item *second;
    while (fast != NULL && fast->next != NULL) {
        slow = slow->next;
        fast = fast->next->next;
    }
    second = slow->next;
    slow->next = NULL;
    return second;
}

struct Item *merge_sort(struct Item *head) {
    struct Item *second;
    if (head == NULL || head->next == NULL) {
        return head;
    }
    second = split_half(head);
    return merge(merge_sort(head), merge_sort(second));
}

int count_items(struct Item *head) {
    int n = 0;
    for (; head != NULL; head = head->next) {
        n = n + 1;
    }
    return n;
}
